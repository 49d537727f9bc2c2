"""Generators for the benchmark families: parity blocks, Horn chains,
parity contradictions, and a catalog of small worked examples.

Parity blocks O_n / E_n are CNFs over n main variables (plus n-3 auxiliary
variables for n > 3) whose satisfying assignments, projected onto the main
variables, are exactly the odd / even popcount patterns.  The recursion
O_{n+1}(v0..vn) = O_n(a, v0..v_{n-1 minus 1}) & E_3(a, v_{n-1}, v_n) with a
fresh auxiliary a keeps every clause at width 3 and the clause count at
4(n-2).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence

from .core import Clause, Cnf
from .errors import DuplicateVars, UnknownExample

# Falsified points of the width-3 odd block, in emission order; the even
# block falsifies the complements (flip every literal).
_ODD3_POINTS = ((0, 0, 0), (0, 1, 1), (1, 0, 1), (1, 1, 0))


@dataclass(frozen=True)
class ParityBlock:
    main_vars: tuple[int, ...]
    aux_vars: tuple[int, ...]
    parity: str  # "odd" | "even"
    cnf: Cnf


def _parity3_clauses(parity: str, vars3: Sequence[int]) -> list[Clause]:
    flip = parity == "even"
    clauses = []
    for point in _ODD3_POINTS:
        lits = []
        for v, val in zip(vars3, point):
            positive = (val == 0) != flip
            lits.append(v if positive else -v)
        clauses.append(Clause.from_ints(lits))
    return clauses


def _check_distinct(vars_: Sequence[int]):
    if len(set(vars_)) != len(vars_):
        raise DuplicateVars(f"variables must be distinct, got {tuple(vars_)}")


def gen_parity3(parity: str, vars3: Sequence[int]) -> ParityBlock:
    """The verbatim 4-clause width-3 parity block."""
    if len(vars3) != 3:
        raise DuplicateVars("need exactly 3 variables")
    _check_distinct(vars3)
    clauses = _parity3_clauses(parity, vars3)
    num_vars = max(vars3)
    return ParityBlock(tuple(vars3), (), parity, Cnf(tuple(clauses), num_vars))


def gen_parity_n(parity: str, n: int, main_vars: Sequence[int] | None = None,
                 fresh: Iterator[int] | None = None) -> ParityBlock:
    """Recursive n-variable parity block; 4(n-2) clauses, n-3 aux vars."""
    if n < 3:
        raise ValueError("parity blocks need n >= 3")
    if main_vars is None:
        main_vars = tuple(range(1, n + 1))
    main_vars = tuple(main_vars)
    if len(main_vars) != n:
        raise DuplicateVars(f"expected {n} main variables, got {len(main_vars)}")
    _check_distinct(main_vars)
    if fresh is None:
        fresh = itertools.count(max(main_vars) + 1)

    aux: list[int] = []

    def build(parity: str, vars_: tuple[int, ...]) -> list[Clause]:
        if len(vars_) == 3:
            return _parity3_clauses(parity, vars_)
        a = next(fresh)
        aux.append(a)
        head = build(parity, (a,) + vars_[:-2])
        tail = _parity3_clauses("even", (a,) + vars_[-2:])
        return head + tail

    clauses = build(parity, main_vars)
    num_vars = max(itertools.chain(main_vars, aux))
    num_main = n if main_vars == tuple(range(1, n + 1)) else None
    cnf = Cnf(tuple(clauses), num_vars, num_main)
    return ParityBlock(main_vars, tuple(aux), parity, cnf)


def gen_horn_chain(k: int) -> Cnf:
    """(x1) & (~x1|x2) & ... & (~xk|x_{k+1}) & (~x_{k+1}): a Horn core."""
    if k < 0:
        raise ValueError("chain length must be >= 0")
    clauses = [Clause.from_ints([1])]
    for i in range(1, k + 1):
        clauses.append(Clause.from_ints([-i, i + 1]))
    clauses.append(Clause.from_ints([-(k + 1)]))
    return Cnf(tuple(clauses), k + 1)


def gen_parity_contradiction(n: int, disjoint: bool = False) -> Cnf:
    """Odd and even parity blocks conjoined.

    Shared main variables (default) give an unsatisfiable CNF with 8(n-2)
    clauses and 2(n-3) aux vars.  With disjoint=True the blocks live on
    separate main variables and the result is satisfiable but its model set
    splits into far-apart regions.
    """
    if n < 3:
        raise ValueError("need n >= 3")
    if disjoint:
        odd = gen_parity_n("odd", n, tuple(range(1, n + 1)),
                           itertools.count(2 * n + 1))
        even = gen_parity_n("even", n, tuple(range(n + 1, 2 * n + 1)),
                            itertools.count(2 * n + 1 + len(odd.aux_vars)))
    else:
        odd = gen_parity_n("odd", n, tuple(range(1, n + 1)),
                           itertools.count(n + 1))
        even = gen_parity_n("even", n, tuple(range(1, n + 1)),
                            itertools.count(n + 1 + len(odd.aux_vars)))
    clauses = odd.cnf.clauses + even.cnf.clauses
    num_vars = max(odd.cnf.num_vars, even.cnf.num_vars)
    num_main = n if not disjoint else 2 * n
    return Cnf(clauses, num_vars, num_main)


# Worked small examples, catalogued verbatim (1-based variable ids).
_CATALOG: dict[str, tuple[tuple[int, ...], ...]] = {
    # six-clause core splitting a unit contradiction over two extra vars
    "split-muc": ((1,), (-1, 2), (-2, -3, -4), (-2, 3, 4), (3, -4), (-3, 4)),
    # correlated pair before / after pairwise orthogonalization
    "cut-pair": ((1, -2, -3), (1, 4, 5)),
    "cut-pair-orthogonal": ((1, -2, -3), (1, 4, 5, 2), (1, 4, 5, -2, 3)),
    # length-2 Horn chain and its orthogonal form
    "chain": ((1,), (-1, 2), (-2, 3), (-3,)),
    "chain-orthogonal": ((1,), (-1, 2), (-1, -2, 3), (-1, -2, -3)),
}


def worked_example(name: str) -> Cnf:
    """Catalog of small formulas used as golden tests and CLI demos."""
    if name == "odd3":
        return gen_parity3("odd", (1, 2, 3)).cnf
    if name == "even3":
        return gen_parity3("even", (4, 5, 6)).cnf
    if name == "disparted-parity":
        # odd block on shared vars conjoined with (even block on fresh vars
        # OR even block on the shared vars), expanded by distribution
        odd = _parity3_clauses("odd", (1, 2, 3))
        even_far = _parity3_clauses("even", (4, 5, 6))
        even_near = _parity3_clauses("even", (1, 2, 3))
        clauses = list(odd)
        for e in even_far:
            for b in even_near:
                clauses.append(Clause(e.literals + b.literals))
        return Cnf(tuple(clauses), 6)
    if name in _CATALOG:
        return Cnf.from_ints(_CATALOG[name])
    raise UnknownExample(f"no catalogued formula named {name!r}; "
                         f"known: {sorted(_CATALOG) + ['odd3', 'even3', 'disparted-parity']}")
