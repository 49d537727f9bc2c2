"""Command-line front end.

Exit codes: 0 success (or positive verdict), 1 negative verdict,
2 usage or input error.  MUCLAB_BUDGET overrides the enumeration budget.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .core import Cnf, parse_dimacs, write_dimacs
from .errors import MuclabError
from .constructions import (gen_horn_chain, gen_parity_contradiction,
                            gen_parity_n, worked_example)
from .experiment import (ExperimentConfig, emit_report, render_growth_figure,
                         run_growth_experiment)
from .geometry import inner_harmony, inner_product, phase_difference
from .orthogonalize import (DEFAULT_CLAUSE_CAP, orthogonalize_cnf,
                            orthogonalize_horn_muc)
from .semantics import DEFAULT_BUDGET, classify
from .solvers import is_muc_classification, is_muc_deletion


def _budget(args) -> int:
    if getattr(args, "budget", None) is not None:
        return args.budget
    env = os.environ.get("MUCLAB_BUDGET")
    if env is not None:
        return int(env)
    return DEFAULT_BUDGET


def _load(path: str) -> Cnf:
    with open(path) as fh:
        return parse_dimacs(fh.read())


def _emit_cnf(f: Cnf, path: str | None):
    text = write_dimacs(f)
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def _cmd_parse(args) -> int:
    _emit_cnf(_load(args.file), args.output)
    return 0


def _cmd_classify(args) -> int:
    print(classify(_load(args.file), _budget(args)).to_json())
    return 0


def _cmd_muc_check(args) -> int:
    f = _load(args.file)
    if args.method == "deletion":
        verdict = is_muc_deletion(f, budget=_budget(args))
    else:
        verdict = is_muc_classification(f, _budget(args))
    print(json.dumps({"is_muc": verdict.is_muc,
                      "failing_reason": verdict.failing_reason,
                      "clause_index": verdict.clause_index}))
    return 0 if verdict.is_muc else 1


def _clause_pair(f: Cnf, i: int, j: int):
    m = len(f.clauses)
    if not (0 <= i < m and 0 <= j < m):
        raise MuclabError(f"clause indices {i},{j} out of range 0..{m - 1}")
    return f.clauses[i], f.clauses[j]


def _cmd_phase(args) -> int:
    a, b = _clause_pair(_load(args.file), args.i, args.j)
    print(json.dumps({"phase_difference": phase_difference(a, b)}))
    return 0


def _cmd_inner(args) -> int:
    a, b = _clause_pair(_load(args.file), args.i, args.j)
    if args.harmony:
        result = inner_harmony(a, b)
        key = "inner_harmony"
    else:
        result = inner_product(a, b)
        key = "inner_product"
    print(json.dumps({key: result}))
    return 0 if result else 1


def _cmd_orthogonalize(args) -> int:
    f = _load(args.file)
    if args.horn:
        out, trace = orthogonalize_horn_muc(f)
    else:
        out, trace = orthogonalize_cnf(f, _budget(args), args.clause_cap)
    if args.trace:
        with open(args.trace, "w") as fh:
            fh.write(trace.to_jsonl())
    _emit_cnf(out, args.emit)
    return 0


def _cmd_gen(args) -> int:
    if args.kind == "chain":
        f = gen_horn_chain(args.k)
    elif args.kind == "parity":
        f = gen_parity_n(args.parity, args.n).cnf
    elif args.kind == "parity-contradiction":
        f = gen_parity_contradiction(args.n, args.disjoint)
    else:
        f = worked_example(args.name)
    _emit_cnf(f, args.output)
    return 0


def _cmd_experiment(args) -> int:
    if args.config:
        with open(args.config) as fh:
            cfg = ExperimentConfig.from_json(fh.read())
    else:
        if args.family is None or args.n_min is None or args.n_max is None:
            raise MuclabError("need --config or all of --family/--n-min/--n-max")
        cfg = ExperimentConfig(args.family, args.n_min, args.n_max,
                               _budget(args), args.clause_cap)
    report = run_growth_experiment(cfg)
    if args.csv:
        with open(args.csv, "w") as fh:
            fh.write(emit_report(report, "csv"))
    if args.json:
        with open(args.json, "w") as fh:
            fh.write(emit_report(report, "json"))
    if args.plot:
        render_growth_figure([report], args.plot)
    if not (args.csv or args.json):
        sys.stdout.write(emit_report(report, "csv"))
    print(report.summary(), file=sys.stderr)
    return 0


def _build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="muclab",
                                description="CNF core analysis and orthogonalization lab")
    p.add_argument("--budget", type=int, default=None,
                   help="enumeration budget (assignments); default 2^24 or $MUCLAB_BUDGET")
    sub = p.add_subparsers(dest="verb", required=True)

    sp = sub.add_parser("parse", help="parse a DIMACS file and re-emit it")
    sp.add_argument("file")
    sp.add_argument("-o", "--output")
    sp.set_defaults(run=_cmd_parse)

    sp = sub.add_parser("classify", help="truth-vector classification as JSON")
    sp.add_argument("file")
    sp.set_defaults(run=_cmd_classify)

    sp = sub.add_parser("muc-check", help="minimal-unsatisfiable-core check")
    sp.add_argument("--method", choices=("deletion", "classification"),
                    default="deletion")
    sp.add_argument("file")
    sp.set_defaults(run=_cmd_muc_check)

    sp = sub.add_parser("phase", help="phase difference of two clauses")
    sp.add_argument("file")
    sp.add_argument("i", type=int)
    sp.add_argument("j", type=int)
    sp.set_defaults(run=_cmd_phase)

    sp = sub.add_parser("inner", help="clause inner product / harmony")
    mode = sp.add_mutually_exclusive_group(required=True)
    mode.add_argument("--product", action="store_true")
    mode.add_argument("--harmony", action="store_true")
    sp.add_argument("file")
    sp.add_argument("i", type=int)
    sp.add_argument("j", type=int)
    sp.set_defaults(run=_cmd_inner)

    sp = sub.add_parser("orthogonalize", help="rewrite into an orthogonal core")
    mode = sp.add_mutually_exclusive_group(required=True)
    mode.add_argument("--horn", action="store_true")
    mode.add_argument("--generic", action="store_true")
    sp.add_argument("--trace", help="write the step log as JSONL")
    sp.add_argument("--emit", help="write the output CNF here instead of stdout")
    sp.add_argument("--clause-cap", type=int, default=DEFAULT_CLAUSE_CAP)
    sp.add_argument("file")
    sp.set_defaults(run=_cmd_orthogonalize)

    sp = sub.add_parser("gen", help="generate benchmark formulas")
    gsub = sp.add_subparsers(dest="kind", required=True)
    g = gsub.add_parser("chain")
    g.add_argument("--k", type=int, required=True)
    g.add_argument("-o", "--output")
    g.set_defaults(run=_cmd_gen)
    g = gsub.add_parser("parity")
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--parity", choices=("odd", "even"), required=True)
    g.add_argument("-o", "--output")
    g.set_defaults(run=_cmd_gen)
    g = gsub.add_parser("parity-contradiction")
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--disjoint", action="store_true")
    g.add_argument("-o", "--output")
    g.set_defaults(run=_cmd_gen)
    g = gsub.add_parser("example")
    g.add_argument("--name", required=True)
    g.add_argument("-o", "--output")
    g.set_defaults(run=_cmd_gen)

    sp = sub.add_parser("experiment", help="growth-contrast sweep")
    sp.add_argument("--config", help="JSON config file")
    sp.add_argument("--family", choices=("chain", "parity-contradiction"))
    sp.add_argument("--n-min", type=int)
    sp.add_argument("--n-max", type=int)
    sp.add_argument("--clause-cap", type=int, default=DEFAULT_CLAUSE_CAP)
    sp.add_argument("--csv", help="write CSV report here")
    sp.add_argument("--json", help="write JSON report here")
    sp.add_argument("--plot", help="render the growth figure to this image file")
    sp.set_defaults(run=_cmd_experiment)
    return p


def cli_dispatch(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 2 if e.code not in (0, None) else 0
    try:
        return args.run(args)
    except (MuclabError, OSError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


def main():
    sys.exit(cli_dispatch())
