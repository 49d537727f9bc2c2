"""Clause cutting and CNF orthogonalization with replayable traces.

A cut replaces clause C with the equivalent pair (C|v), (C|~v) for a
variable v foreign to C.  Repeated cutting plus absorption of subsumed
branches rewrites an unsatisfiable CNF into one whose falsifying cubes
partition the assignment space: every assignment falsifies exactly one
clause.  Horn cores admit a cheap ordered procedure; the generic rewrite
can blow up exponentially, which is the quantity the growth experiment
measures.

Every rewrite logs its steps against the current working clause list, so a
trace can be replayed from the input to reproduce the output bit-exactly.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

import numpy as np

from .core import Clause, Cnf, Literal, subsumes
from .errors import (BudgetExceeded, InputSatisfiable, NotAbsorbable,
                     NotMuc, NotHorn, VariableAlreadyPresent)
from .geometry import horn_order, inner_harmony, topological_order
from .semantics import DEFAULT_BUDGET
from .core import is_horn
from .solvers import dpll_sat, is_muc_deletion

DEFAULT_CLAUSE_CAP = 1 << 16


@dataclass(frozen=True)
class TraceStep:
    op: str          # "cut" | "absorb" | "dedupe"
    index: int       # clause position in the working list at step time
    var: int | None = None    # cut variable
    by: int | None = None     # absorbing clause position

    def to_json(self) -> str:
        d = {"op": self.op, "index": self.index}
        if self.var is not None:
            d["var"] = self.var
        if self.by is not None:
            d["by"] = self.by
        return json.dumps(d)

    @classmethod
    def from_json(cls, line: str) -> "TraceStep":
        d = json.loads(line)
        return cls(d["op"], d["index"], d.get("var"), d.get("by"))


@dataclass
class OrthogonalizationTrace:
    input: Cnf
    output: Cnf
    steps: list[TraceStep] = field(default_factory=list)

    def to_jsonl(self) -> str:
        return "".join(s.to_json() + "\n" for s in self.steps)

    @classmethod
    def steps_from_jsonl(cls, text: str) -> list[TraceStep]:
        return [TraceStep.from_json(line) for line in text.splitlines() if line.strip()]

    def replay(self) -> Cnf:
        """Re-apply the step log to the input; must reproduce the output."""
        work = list(self.input.clauses)
        for s in self.steps:
            if s.op == "cut":
                lo, hi = clause_cut(work[s.index], s.var)
                work[s.index:s.index + 1] = [lo, hi]
            elif s.op in ("absorb", "dedupe"):
                del work[s.index]
            else:
                raise ValueError(f"unknown trace op {s.op!r}")
        return Cnf(tuple(work), self.input.num_vars, self.input.num_main)


def clause_cut(c: Clause, v: int) -> tuple[Clause, Clause]:
    """Split c into (c | v, c | ~v); their conjunction is equivalent to c."""
    if c.has_var(v):
        raise VariableAlreadyPresent(f"x{v} already occurs in {c!r}")
    return c.with_literal(Literal(v, True)), c.with_literal(Literal(v, False))


def orthogonalize_pair(target: Clause, ref: Clause) -> list[Clause]:
    """Rewrite target into clauses each cube-disjoint from ref.

    The literals of ref whose variables are foreign to target are peeled in
    canonical order; each peel emits one branch disagreeing with ref, and
    the fully agreeing residual branch is dropped as subsumed by ref.
    Conjunction of the result with ref is equivalent to target with ref.
    """
    if inner_harmony(target, ref):
        return [target]
    foreign = [l for l in ref.literals if not target.has_var(l.var)]
    out = []
    trunk = target
    for lit in foreign:
        out.append(trunk.with_literal(lit.negate()))
        trunk = trunk.with_literal(lit)
    if not subsumes(ref, trunk):
        raise NotAbsorbable(
            f"residual {trunk!r} is not subsumed by reference {ref!r}")
    return out


def _intersects(a: Clause, b: Clause) -> bool:
    shared = a.cube_mask & b.cube_mask
    return (a.cube_fix ^ b.cube_fix) & shared == 0


def orthogonalize_horn_muc(f: Cnf) -> tuple[Cnf, OrthogonalizationTrace]:
    """Orthogonalize a Horn core by processing clauses from the fact end of
    the implication order toward the goal end, splitting each against every
    already-finalized clause.

    Output clause count equals input clause count; each clause is replaced
    in place by its surviving branches.
    """
    if not is_horn(f):
        raise NotHorn("input is not Horn")
    verdict = is_muc_deletion(f, solver="dpll")
    if not verdict.is_muc:
        raise NotMuc(f"input is not a MUC: {verdict.describe()}")
    processing = list(reversed(topological_order(horn_order(f))))

    # groups[i] holds the current branches of input clause i; the working
    # list seen by the trace is the concatenation in input order.
    groups: list[list[Clause]] = [[c] for c in f.clauses]
    trace = OrthogonalizationTrace(f, f)

    def position(orig: int, offset: int) -> int:
        return sum(len(groups[k]) for k in range(orig)) + offset

    def find_absorber(finalized: list[int], low: int, trunk: Clause) -> int | None:
        # prefer the reference clause, then any other finalized clause
        for fin in [low] + [k for k in finalized if k != low]:
            for off, cl in enumerate(groups[fin]):
                if subsumes(cl, trunk):
                    return position(fin, off)
        return None

    finalized: list[int] = []  # original indices, in processing order
    for orig in processing:
        for lower in finalized:
            for low_off in range(len(groups[lower])):
                low_clause = groups[lower][low_off]
                frag_off = 0
                while frag_off < len(groups[orig]):
                    frag = groups[orig][frag_off]
                    if inner_harmony(frag, low_clause):
                        frag_off += 1
                        continue
                    # peel the reference's foreign literals off this branch;
                    # the fully agreeing trunk is then absorbed
                    foreign = [l for l in low_clause.literals if not frag.has_var(l.var)]
                    trunk = frag
                    toff = frag_off
                    tpos = position(orig, frag_off)
                    for lit in foreign:
                        trace.steps.append(TraceStep("cut", tpos, var=lit.var))
                        lo, hi = clause_cut(trunk, lit.var)
                        groups[orig][toff:toff + 1] = [lo, hi]
                        delta = 0 if lit.polarity else 1  # positive branch first
                        toff += delta
                        tpos += delta
                        trunk = trunk.with_literal(lit)
                    absorber = find_absorber(finalized, lower, trunk)
                    if absorber is None:
                        raise NotAbsorbable(
                            f"residual {trunk!r} not subsumed by any finalized clause")
                    trace.steps.append(TraceStep("absorb", tpos, by=absorber))
                    del groups[orig][toff]
                    # surviving branches are disjoint from low_clause and get
                    # skipped by the harmony check on the next iterations
        finalized.append(orig)

    out = Cnf(tuple(c for g in groups for c in g), f.num_vars, f.num_main)
    trace.output = out
    return out, trace


def total_order_check(f: Cnf) -> bool:
    """True iff the clauses' negative-literal sets form a strict chain under
    inclusion (the ladder shape of an orthogonalized Horn core)."""
    neg_sets = [frozenset(l.var for l in c if not l.polarity) for c in f]
    neg_sets.sort(key=len)
    for prev, cur in zip(neg_sets, neg_sets[1:]):
        if not (prev < cur):
            return False
    return True


def orthogonalize_cnf(f: Cnf, budget: int = DEFAULT_BUDGET,
                      clause_cap: int = DEFAULT_CLAUSE_CAP,
                      ) -> tuple[Cnf, OrthogonalizationTrace]:
    """Generic rewrite of an unsatisfiable CNF into an orthogonal core.

    Repeatedly: drop duplicate and subsumed clauses, then take the lowest
    intersecting cube pair (i, j) and either absorb or cut clause j at the
    lowest variable of clause i foreign to j, until all cubes are pairwise
    disjoint.  Raises BudgetExceeded when the working set outgrows
    clause_cap (the cap being hit is an experiment datum, not a bug).
    """
    if dpll_sat(f).satisfiable:
        raise InputSatisfiable("orthogonalization needs an unsatisfiable input")
    work = list(f.clauses)
    trace = OrthogonalizationTrace(f, f)

    # Cubes of clauses before position i are pairwise disjoint, as are pairs
    # (i, b) for b < j.  Cutting or deleting at >= j never breaks that
    # prefix, so a single forward sweep realizes the lowest-pair-first rule.
    i = 0
    while i < len(work) - 1:
        j = i + 1
        restart_i = False
        while j < len(work):
            a, b = work[i], work[j]
            if not _intersects(a, b):
                j += 1
                continue
            if a == b:
                trace.steps.append(TraceStep("dedupe", j))
                del work[j]
                continue
            if subsumes(a, b):
                trace.steps.append(TraceStep("absorb", j, by=i))
                del work[j]
                continue
            if subsumes(b, a):
                trace.steps.append(TraceStep("absorb", i, by=j - 1))
                del work[i]
                restart_i = True
                break
            cut_var = next(v for v in a.vars() if not b.has_var(v))
            trace.steps.append(TraceStep("cut", j, var=cut_var))
            lo, hi = clause_cut(b, cut_var)
            work[j:j + 1] = [lo, hi]
            if len(work) > clause_cap:
                raise BudgetExceeded(
                    f"clause cap {clause_cap} exceeded during orthogonalization")
            if len(trace.steps) > budget:
                raise BudgetExceeded("step budget exceeded during orthogonalization")
        if not restart_i:
            i += 1

    out = Cnf(tuple(work), f.num_vars, f.num_main)
    trace.output = out
    return out, trace


def verify_orthogonal_muc(f: Cnf, budget: int = DEFAULT_BUDGET) -> bool:
    """Exhaustive check that every assignment falsifies exactly one clause."""
    n = f.num_vars
    if 2 ** n > budget:
        raise BudgetExceeded(f"2^{n} assignments exceed budget {budget}")
    counts = np.zeros(1 << n, dtype=np.uint32)
    for c in f:
        idx = np.array([c.cube_fix], dtype=np.uint64)
        for k in range(n):
            bit = np.uint64(1 << k)
            if not c.cube_mask >> k & 1:
                idx = np.concatenate([idx, idx | bit])
        np.add.at(counts, idx, 1)
        if counts.max() > 1:
            return False
    return bool((counts == 1).all())
