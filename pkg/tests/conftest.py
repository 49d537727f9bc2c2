"""Shared strategies and brute-force oracle helpers."""

from __future__ import annotations

import functools
import itertools
import random

from hypothesis import strategies as st

from muclab.core import Clause, Cnf


def clauses(num_vars: int, min_width: int = 1, max_width: int | None = None):
    """Strategy: a non-tautological clause (signs drawn per variable)."""
    if max_width is None:
        max_width = num_vars
    return st.lists(
        st.tuples(st.integers(1, num_vars), st.booleans()),
        min_size=min_width, max_size=max_width,
        unique_by=lambda t: t[0],
    ).map(lambda pairs: Clause.from_ints(
        [v if pos else -v for v, pos in pairs]))


def cnfs(num_vars: int, max_clauses: int = 6, min_clauses: int = 0,
         allow_empty_clause: bool = False):
    min_width = 0 if allow_empty_clause else 1
    return st.lists(clauses(num_vars, min_width=min_width),
                    min_size=min_clauses, max_size=max_clauses).map(
        lambda cs: Cnf(tuple(cs), num_vars))


def random_clause(rng: random.Random, num_vars: int,
                  min_width: int = 1, max_width: int | None = None) -> Clause:
    if max_width is None:
        max_width = num_vars
    width = rng.randint(min_width, min(max_width, num_vars))
    vs = rng.sample(range(1, num_vars + 1), width)
    return Clause.from_ints([v if rng.random() < 0.5 else -v for v in vs])


def random_cnf(rng: random.Random, num_vars: int, num_clauses: int,
               max_width: int | None = None) -> Cnf:
    return Cnf(tuple(random_clause(rng, num_vars, max_width=max_width)
                     for _ in range(num_clauses)), num_vars)


def falsifiers(c: Clause, universe_vars: tuple[int, ...]) -> list[int]:
    """All assignments over universe_vars (packed, bit i = var universe_vars[i])
    that falsify c.  c's vars must be within the universe."""
    base = 0
    free = 0
    for i, v in enumerate(universe_vars):
        if c.has_var(v):
            if not any(l.var == v and l.polarity for l in c):
                base |= 1 << i  # negative literal: falsified when var is true
        else:
            free |= 1 << i
    # enumerate submasks of the free positions
    out = [base | free]
    s = free
    while s:
        s = (s - 1) & free
        out.append(base | s)
        if s == 0:
            break
    return sorted(set(out))


@functools.lru_cache(maxsize=1)
def horn_mucs_4vars(max_clauses: int = 5) -> tuple[Cnf, ...]:
    """All Horn MUCs over <= 4 vars with 2..max_clauses clauses.

    Uses per-clause falsity bitmaps over the 16 assignments: a clause set is
    unsat iff the bitmap union covers everything, and minimal iff every
    leave-one-out union leaves a hole.
    """
    horn = []
    for width in range(1, 5):
        for vs in itertools.combinations(range(1, 5), width):
            for head in (None, *vs):
                horn.append(Clause.from_ints(
                    [v if v == head else -v for v in vs]))
    full = (1 << 16) - 1
    maps = []
    for c in horn:
        bm = 0
        for a in range(16):
            if (a & c.cube_mask) == c.cube_fix:
                bm |= 1 << a
        maps.append(bm)
    found = []
    for size in range(2, max_clauses + 1):
        for idxs in itertools.combinations(range(len(horn)), size):
            union = 0
            for i in idxs:
                union |= maps[i]
            if union != full:
                continue
            minimal = True
            for i in idxs:
                rest = 0
                for j in idxs:
                    if j != i:
                        rest |= maps[j]
                if rest == full:
                    minimal = False
                    break
            if minimal:
                found.append(Cnf(tuple(horn[i] for i in idxs), 4))
    return tuple(found)


def min_hamming_oracle(a: Clause, b: Clause) -> int:
    """Minimum Hamming distance between the two falsifying sets, enumerated
    over the union of the clauses' variables."""
    universe = tuple(sorted(set(a.vars()) | set(b.vars())))
    fa = falsifiers(a, universe)
    fb = falsifiers(b, universe)
    return min((x ^ y).bit_count() for x, y in itertools.product(fa, fb))
