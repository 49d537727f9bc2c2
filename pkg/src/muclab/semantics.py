"""Assignment evaluation, per-clause truth vectors, CNF classification.

Enumeration-heavy operations carry an explicit budget (maximum number of
assignments visited, default 2**24) and raise BudgetExceeded instead of
silently running forever.  Exactness beats scalability here: everything is
checked by exhaustive enumeration at desk scale.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .core import Clause, Cnf
from .errors import BudgetExceeded, VariableOutOfRange

DEFAULT_BUDGET = 1 << 24


@dataclass(frozen=True)
class Assignment:
    """Total truth-value map for vars 1..num_vars, packed into an int.

    Bit (var-1) of `bits` holds the value of var.
    """

    bits: int
    num_vars: int

    @classmethod
    def from_bools(cls, values: Sequence[bool]) -> "Assignment":
        bits = 0
        for i, v in enumerate(values):
            if v:
                bits |= 1 << i
        return cls(bits, len(values))

    def value(self, var: int) -> bool:
        if not 1 <= var <= self.num_vars:
            raise VariableOutOfRange(f"x{var} not in 1..{self.num_vars}")
        return bool(self.bits >> (var - 1) & 1)

    def to_tuple(self) -> tuple[bool, ...]:
        return tuple(bool(self.bits >> i & 1) for i in range(self.num_vars))

    def to_bitstring(self) -> str:
        return "".join("1" if self.bits >> i & 1 else "0" for i in range(self.num_vars))

    def __str__(self):
        return self.to_bitstring()


@dataclass(frozen=True)
class LogicalValueVector:
    """Per-clause truth bits for one assignment; bit i is clause i."""

    bits: int
    num_clauses: int

    @property
    def is_all_true(self) -> bool:
        return self.bits == (1 << self.num_clauses) - 1

    @property
    def is_cyclic(self) -> bool:
        false_bits = ~self.bits & (1 << self.num_clauses) - 1
        return false_bits != 0 and false_bits & (false_bits - 1) == 0

    def false_indices(self) -> tuple[int, ...]:
        return tuple(i for i in range(self.num_clauses) if not self.bits >> i & 1)

    def to_bitstring(self) -> str:
        return "".join("1" if self.bits >> i & 1 else "0" for i in range(self.num_clauses))

    def __str__(self):
        return self.to_bitstring()


@dataclass(frozen=True)
class ClassificationReport:
    realized: frozenset[LogicalValueVector]
    class_sizes: dict  # LogicalValueVector -> assignment count
    has_all_true: bool
    cyclic_realized: frozenset[int]  # clause indices whose cyclic vector is realized
    num_clauses: int
    num_vars: int

    def to_json(self) -> str:
        return json.dumps({
            "realized": sorted(v.to_bitstring() for v in self.realized),
            "class_sizes": {v.to_bitstring(): n
                            for v, n in sorted(self.class_sizes.items(),
                                               key=lambda kv: kv[0].to_bitstring())},
            "has_all_true": self.has_all_true,
            "cyclic_realized": sorted(self.cyclic_realized),
        })


def _check_vars(c: Clause, num_vars: int):
    if c.cube_mask >> num_vars:
        raise VariableOutOfRange(f"clause {c!r} references vars beyond {num_vars}")


def eval_clause(c: Clause, a: Assignment) -> bool:
    """True iff some literal is satisfied; the empty clause is always false."""
    _check_vars(c, a.num_vars)
    if c.is_empty():
        return False
    return (a.bits & c.cube_mask) != c.cube_fix


def eval_cnf(f: Cnf, a: Assignment) -> bool:
    return all(eval_clause(c, a) for c in f)


def logical_value_vector(f: Cnf, a: Assignment) -> LogicalValueVector:
    bits = 0
    for i, c in enumerate(f):
        if eval_clause(c, a):
            bits |= 1 << i
    return LogicalValueVector(bits, len(f.clauses))


def _check_budget(f: Cnf, budget: int):
    if 2 ** f.num_vars > budget:
        raise BudgetExceeded(f"2^{f.num_vars} assignments exceed budget {budget}")


def _falsity_matrix(f: Cnf) -> np.ndarray:
    """Boolean matrix [clause, assignment]: True where the clause is false."""
    n = f.num_vars
    space = np.arange(1 << n, dtype=np.uint64)
    rows = np.empty((len(f.clauses), 1 << n), dtype=bool)
    for i, c in enumerate(f):
        rows[i] = (space & np.uint64(c.cube_mask)) == np.uint64(c.cube_fix)
    return rows


def classify(f: Cnf, budget: int = DEFAULT_BUDGET) -> ClassificationReport:
    """Exhaustive classification of all 2^num_vars assignments by their
    per-clause truth vectors."""
    _check_budget(f, budget)
    m = len(f.clauses)
    n = f.num_vars
    if m == 0:
        vec = LogicalValueVector(0, 0)
        return ClassificationReport(frozenset([vec]), {vec: 1 << n}, True,
                                    frozenset(), 0, n)
    if m <= 63:
        false_rows = _falsity_matrix(f)
        weights = (np.uint64(1) << np.arange(m, dtype=np.uint64))[:, None]
        vec_ids = ((~false_rows).astype(np.uint64) * weights).sum(axis=0)
        values, counts = np.unique(vec_ids, return_counts=True)
        sizes = {LogicalValueVector(int(v), m): int(c) for v, c in zip(values, counts)}
    else:
        sizes = {}
        for bits in range(1 << n):
            vec = logical_value_vector(f, Assignment(bits, n))
            sizes[vec] = sizes.get(vec, 0) + 1
    realized = frozenset(sizes)
    all_true = (1 << m) - 1
    cyclic = frozenset(v.false_indices()[0] for v in realized if v.is_cyclic)
    return ClassificationReport(realized, sizes, LogicalValueVector(all_true, m) in realized,
                                cyclic, m, n)


def satisfying_set(f: Cnf, budget: int = DEFAULT_BUDGET) -> frozenset[Assignment]:
    """All assignments satisfying f, by exhaustive enumeration."""
    _check_budget(f, budget)
    n = f.num_vars
    if not f.clauses:
        return frozenset(Assignment(b, n) for b in range(1 << n))
    sat = ~_falsity_matrix(f).any(axis=0)
    return frozenset(Assignment(int(b), n) for b in np.flatnonzero(sat))


def connected_components(points: Iterable[Assignment]) -> list[frozenset[Assignment]]:
    """Components of the point set under Hamming-distance-1 adjacency."""
    pts = list(points)
    if not pts:
        return []
    widths = {p.num_vars for p in pts}
    if len(widths) > 1:
        raise ValueError(f"mixed point widths {sorted(widths)}")
    n = widths.pop()
    index = {p.bits: i for i, p in enumerate(pts)}
    parent = list(range(len(pts)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i, p in enumerate(pts):
        for k in range(n):
            j = index.get(p.bits ^ (1 << k))
            if j is not None:
                ri, rj = find(i), find(j)
                if ri != rj:
                    parent[ri] = rj
    groups: dict[int, set[Assignment]] = {}
    for i, p in enumerate(pts):
        groups.setdefault(find(i), set()).add(p)
    return [frozenset(g) for g in groups.values()]


def project(points: Iterable[Assignment], main_vars: Sequence[int]) -> frozenset[Assignment]:
    """Existential projection: restrict each point to main_vars, dedupe."""
    out = set()
    for p in points:
        bits = 0
        for i, v in enumerate(main_vars):
            if p.value(v):
                bits |= 1 << i
        out.add(Assignment(bits, len(main_vars)))
    return frozenset(out)
