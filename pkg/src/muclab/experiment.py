"""Growth-contrast experiment: orthogonalized core size for Horn chains
(linear in n) versus parity contradictions (exponential in n).

Each sweep point generates an instance, extracts a core if needed, runs the
matching orthogonalization, verifies the output exhaustively, and records
sizes, step counts and wall time.  A blown budget or clause cap flags the
record instead of aborting the sweep; flagged records are excluded from the
confirmed-growth summary so the reported shape never rests on unverified
points.
"""

from __future__ import annotations

import csv
import io
import json
import time
from dataclasses import dataclass, field

from .constructions import gen_horn_chain, gen_parity_contradiction
from .core import Cnf
from .errors import BudgetExceeded
from .orthogonalize import (DEFAULT_CLAUSE_CAP, orthogonalize_cnf,
                            orthogonalize_horn_muc, verify_orthogonal_muc)
from .semantics import DEFAULT_BUDGET, satisfying_set
from .solvers import shrink_to_muc

FAMILIES = ("chain", "parity-contradiction")


@dataclass(frozen=True)
class ExperimentConfig:
    family: str
    n_min: int
    n_max: int
    budget: int = DEFAULT_BUDGET
    clause_cap: int = DEFAULT_CLAUSE_CAP

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}; choose from {FAMILIES}")
        if self.n_max < self.n_min:
            raise ValueError(f"empty range {self.n_min}..{self.n_max}")
        if self.clause_cap < 1:
            raise ValueError("clause_cap must be >= 1")

    @classmethod
    def from_json(cls, text: str) -> "ExperimentConfig":
        d = json.loads(text)
        return cls(d["family"], d["n_min"], d["n_max"],
                   d.get("budget", DEFAULT_BUDGET),
                   d.get("clause_cap", DEFAULT_CLAUSE_CAP))


@dataclass(frozen=True)
class GrowthRecord:
    n: int
    input_clauses: int
    input_vars: int
    output_clauses: int
    steps: int
    wall_time_ms: float
    verified: bool
    cap_hit: bool


@dataclass
class GrowthReport:
    config: ExperimentConfig
    records: list[GrowthRecord] = field(default_factory=list)

    def confirmed(self) -> list[GrowthRecord]:
        """Records that finished and passed verification."""
        return [r for r in self.records if r.verified and not r.cap_hit]

    def summary(self) -> str:
        conf = self.confirmed()
        if not conf:
            return f"{self.config.family}: no confirmed points"
        pts = ", ".join(f"n={r.n}:{r.output_clauses}" for r in conf)
        return f"{self.config.family}: confirmed growth over {len(conf)} points ({pts})"


def _instance(family: str, n: int, budget: int) -> Cnf:
    if family == "chain":
        return gen_horn_chain(n)
    return shrink_to_muc(gen_parity_contradiction(n), budget=budget)


def run_growth_experiment(cfg: ExperimentConfig) -> GrowthReport:
    """Sweep n over the configured range; deterministic up to wall time."""
    report = GrowthReport(cfg)
    for n in range(cfg.n_min, cfg.n_max + 1):
        t0 = time.perf_counter()
        cap_hit = False
        verified = False
        out_clauses = 0
        steps = 0
        try:
            f = _instance(cfg.family, n, cfg.budget)
            if cfg.family == "chain":
                out, trace = orthogonalize_horn_muc(f)
            else:
                out, trace = orthogonalize_cnf(f, cfg.budget, cfg.clause_cap)
            out_clauses = len(out.clauses)
            steps = len(trace.steps)
            verified = (verify_orthogonal_muc(out, cfg.budget)
                        and satisfying_set(out, cfg.budget) == satisfying_set(f, cfg.budget))
        except BudgetExceeded:
            cap_hit = True
            f = _instance(cfg.family, n, cfg.budget)
        ms = (time.perf_counter() - t0) * 1000.0
        report.records.append(GrowthRecord(
            n, len(f.clauses), f.num_vars, out_clauses, steps, ms,
            verified, cap_hit))
    return report


_CSV_COLUMNS = ("n", "input_clauses", "input_vars", "output_clauses",
                "steps", "wall_time_ms", "verified", "cap_hit")


def emit_report(report: GrowthReport, format: str = "csv") -> str:
    if format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(_CSV_COLUMNS)
        for r in report.records:
            w.writerow([r.n, r.input_clauses, r.input_vars, r.output_clauses,
                        r.steps, f"{r.wall_time_ms:.3f}",
                        str(r.verified).lower(), str(r.cap_hit).lower()])
        return buf.getvalue()
    if format == "json":
        return json.dumps({
            "config": {"family": report.config.family,
                       "n_min": report.config.n_min,
                       "n_max": report.config.n_max,
                       "budget": report.config.budget,
                       "clause_cap": report.config.clause_cap},
            "records": [{k: getattr(r, k) for k in _CSV_COLUMNS}
                        for r in report.records],
            "summary": report.summary(),
        }, indent=2)
    raise ValueError(f"unknown report format {format!r}")


def render_growth_figure(reports: list[GrowthReport], path: str):
    """Plot confirmed output size against n for each report, log-scale y."""
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    fig, ax = plt.subplots(figsize=(6, 4))
    for rep in reports:
        conf = rep.confirmed()
        if not conf:
            continue
        ax.plot([r.n for r in conf], [r.output_clauses for r in conf],
                marker="o", label=rep.config.family)
    ax.set_xlabel("n")
    ax.set_ylabel("orthogonalized clause count")
    ax.set_yscale("log", base=2)
    ax.legend()
    ax.grid(True, alpha=0.3)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
