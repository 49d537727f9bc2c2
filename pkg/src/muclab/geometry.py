"""Clause geometry: falsifying cubes, phase differences, inner products.

Each non-tautological clause is falsified on exactly one subcube of the
assignment space (every clause variable pinned to the complement of its
literal polarity).  Phase difference between two clauses is the number of
shared variables on which those cubes disagree, which equals the minimum
Hamming distance between the cubes; the enumeration form of that statement
is kept as a test oracle.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import Clause, Cnf, HornKind, horn_kind, is_horn
from .errors import CyclicOrder, NotHorn
from .semantics import DEFAULT_BUDGET, _falsity_matrix


@dataclass(frozen=True)
class Cube:
    """The falsifying subcube of a clause: var -> pinned value."""

    fixed: tuple[tuple[int, bool], ...]  # sorted by var

    def as_dict(self) -> dict[int, bool]:
        return dict(self.fixed)

    def __len__(self):
        return len(self.fixed)


@dataclass(frozen=True)
class HornOrderGraph:
    """Implication-order graph over clause indices of a Horn CNF.

    Edge (i -> j) when clause i contains a negative literal on v and clause
    j's unique positive literal is v.  Goal clauses are sources, fact
    clauses sinks.
    """

    num_nodes: int
    edges: frozenset[tuple[int, int]]


def clause_cycle(c: Clause) -> int:
    """Number of distinct variables in the clause."""
    return c.width()


def falsifying_cube(c: Clause) -> Cube:
    return Cube(tuple((l.var, not l.polarity) for l in c))


def phase_difference(a: Clause, b: Clause) -> int:
    """Count of shared variables pinned to opposite values by the two
    falsifying cubes (= min Hamming distance between the cubes)."""
    conflict = (a.cube_fix ^ b.cube_fix) & a.cube_mask & b.cube_mask
    return conflict.bit_count()


def inner_product(a: Clause, b: Clause, budget: int = DEFAULT_BUDGET) -> bool:
    """True iff some assignment satisfies both clauses."""
    if a.is_empty() or b.is_empty():
        return False
    if a.width() == 1 and b.width() == 1:
        la, lb = a.literals[0], b.literals[0]
        return not (la.var == lb.var and la.polarity != lb.polarity)
    # with >= 2 literals somewhere, a compatible pick always exists
    return True


def inner_harmony(a: Clause, b: Clause, budget: int = DEFAULT_BUDGET) -> bool:
    """True iff no assignment falsifies both clauses (disjoint cubes)."""
    return phase_difference(a, b) >= 1


def cnf_inner_product(f: Cnf, budget: int = DEFAULT_BUDGET) -> bool:
    """True iff some assignment satisfies every clause (satisfiability)."""
    from .solvers import brute_force_sat
    return brute_force_sat(f, budget).satisfiable


def cnf_inner_harmony(f: Cnf, budget: int = DEFAULT_BUDGET) -> bool:
    """True iff no assignment falsifies two or more clauses, i.e. every
    per-clause truth vector has at most one false bit."""
    if 2 ** f.num_vars > budget:
        from .errors import BudgetExceeded
        raise BudgetExceeded(f"2^{f.num_vars} assignments exceed budget {budget}")
    if len(f.clauses) < 2:
        return True
    counts = _falsity_matrix(f).sum(axis=0)
    return bool((counts <= 1).all())


def horn_order(f: Cnf) -> HornOrderGraph:
    if not is_horn(f):
        raise NotHorn("Horn order is defined for Horn CNFs only")
    head_of: dict[int, list[int]] = {}
    for j, c in enumerate(f):
        if horn_kind(c) in (HornKind.FACT, HornKind.RULE):
            head = next(l.var for l in c if l.polarity)
            head_of.setdefault(head, []).append(j)
    edges = set()
    for i, c in enumerate(f):
        for l in c:
            if not l.polarity:
                for j in head_of.get(l.var, ()):
                    if i != j:
                        edges.add((i, j))
    return HornOrderGraph(len(f.clauses), frozenset(edges))


def topological_order(g: HornOrderGraph) -> list[int]:
    """Clause indices ordered goal toward fact: every edge source precedes
    its target.  Ties broken by clause index; raises CyclicOrder."""
    indeg = [0] * g.num_nodes
    succ: dict[int, list[int]] = {}
    for i, j in g.edges:
        indeg[j] += 1
        succ.setdefault(i, []).append(j)
    import heapq
    ready = [i for i in range(g.num_nodes) if indeg[i] == 0]
    heapq.heapify(ready)
    order = []
    while ready:
        i = heapq.heappop(ready)
        order.append(i)
        for j in succ.get(i, ()):
            indeg[j] -= 1
            if indeg[j] == 0:
                heapq.heappush(ready, j)
    if len(order) != g.num_nodes:
        raise CyclicOrder("Horn implication order contains a cycle")
    return order
