"""Canonical CNF data model, Horn classification and DIMACS I/O.

Variables are positive integers 1..num_vars.  A clause is a canonically
sorted set of literals; clause order inside a Cnf is significant (position i
is bit i of every per-clause truth vector) and is preserved verbatim by the
DIMACS reader and writer.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import ParseError, TautologicalClause


@dataclass(frozen=True, order=True)
class Literal:
    var: int
    polarity: bool  # True = positive occurrence

    def __post_init__(self):
        if self.var < 1:
            raise ValueError(f"variable id must be >= 1, got {self.var}")

    @classmethod
    def from_int(cls, lit: int) -> "Literal":
        if lit == 0:
            raise ValueError("0 is not a literal")
        return cls(abs(lit), lit > 0)

    def to_int(self) -> int:
        return self.var if self.polarity else -self.var

    def negate(self) -> "Literal":
        return Literal(self.var, not self.polarity)

    def __str__(self):
        return f"x{self.var}" if self.polarity else f"~x{self.var}"


class Clause:
    """Immutable, canonically sorted, duplicate-free, non-tautological clause."""

    __slots__ = ("literals", "cube_mask", "cube_fix", "_hash")

    def __init__(self, literals: Iterable[Literal]):
        seen = {}
        for lit in literals:
            prev = seen.get(lit.var)
            if prev is not None and prev != lit.polarity:
                raise TautologicalClause(f"x{lit.var} occurs with both polarities")
            seen[lit.var] = lit.polarity
        lits = tuple(sorted(Literal(v, p) for v, p in seen.items()))
        object.__setattr__(self, "literals", lits)
        # Falsifying cube as bit masks: bit (var-1) of cube_mask marks a clause
        # variable, the same bit of cube_fix holds the falsifying value.
        mask = 0
        fix = 0
        for lit in lits:
            bit = 1 << (lit.var - 1)
            mask |= bit
            if not lit.polarity:
                fix |= bit
        object.__setattr__(self, "cube_mask", mask)
        object.__setattr__(self, "cube_fix", fix)
        object.__setattr__(self, "_hash", hash(lits))

    @classmethod
    def from_ints(cls, lits: Iterable[int]) -> "Clause":
        return cls(Literal.from_int(l) for l in lits)

    def to_ints(self) -> tuple[int, ...]:
        return tuple(l.to_int() for l in self.literals)

    def vars(self) -> tuple[int, ...]:
        return tuple(l.var for l in self.literals)

    def width(self) -> int:
        return len(self.literals)

    def is_empty(self) -> bool:
        return not self.literals

    def has_var(self, var: int) -> bool:
        return bool(self.cube_mask >> (var - 1) & 1)

    def with_literal(self, lit: Literal) -> "Clause":
        return Clause(self.literals + (lit,))

    def __setattr__(self, name, value):
        raise AttributeError("Clause is immutable")

    def __eq__(self, other):
        return isinstance(other, Clause) and self.literals == other.literals

    def __hash__(self):
        return self._hash

    def __len__(self):
        return len(self.literals)

    def __iter__(self):
        return iter(self.literals)

    def __repr__(self):
        if not self.literals:
            return "(empty)"
        return "(" + " | ".join(str(l) for l in self.literals) + ")"


@dataclass(frozen=True)
class Cnf:
    clauses: tuple[Clause, ...]
    num_vars: int
    num_main: int | None = field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "clauses", tuple(self.clauses))
        top = max((l.var for c in self.clauses for l in c), default=0)
        if self.num_vars < top:
            raise ValueError(f"num_vars={self.num_vars} < max referenced var {top}")
        if self.num_main is not None and not 0 <= self.num_main <= self.num_vars:
            raise ValueError("num_main out of range")

    @classmethod
    def from_ints(cls, clauses: Iterable[Iterable[int]], num_vars: int | None = None,
                  num_main: int | None = None) -> "Cnf":
        cs = tuple(Clause.from_ints(c) for c in clauses)
        if num_vars is None:
            num_vars = max((l.var for c in cs for l in c), default=0)
        return cls(cs, num_vars, num_main)

    def to_ints(self) -> tuple[tuple[int, ...], ...]:
        return tuple(c.to_ints() for c in self.clauses)

    def main_vars(self) -> tuple[int, ...]:
        k = self.num_main if self.num_main is not None else self.num_vars
        return tuple(range(1, k + 1))

    def without_clause(self, index: int) -> "Cnf":
        cs = self.clauses[:index] + self.clauses[index + 1:]
        return Cnf(cs, self.num_vars, self.num_main)

    def has_duplicate_clauses(self) -> bool:
        return len(set(self.clauses)) != len(self.clauses)

    def __len__(self):
        return len(self.clauses)

    def __iter__(self):
        return iter(self.clauses)

    def __repr__(self):
        body = " & ".join(repr(c) for c in self.clauses) or "(no clauses)"
        return f"Cnf[{body}; {self.num_vars} vars]"


class HornKind(enum.Enum):
    FACT = "fact"
    RULE = "rule"
    GOAL = "goal"
    NON_HORN = "non-horn"


def normalize_clause(raw: Sequence[Literal]) -> Clause:
    """Dedupe and sort literals; raises TautologicalClause on x and ~x."""
    return Clause(raw)


def horn_kind(c: Clause) -> HornKind:
    pos = sum(1 for l in c if l.polarity)
    neg = len(c) - pos
    if pos >= 2:
        return HornKind.NON_HORN
    if pos == 1:
        return HornKind.FACT if neg == 0 else HornKind.RULE
    # only negative literals, or the empty clause
    return HornKind.GOAL


def is_horn(f: Cnf) -> bool:
    return all(horn_kind(c) is not HornKind.NON_HORN for c in f)


def subsumes(a: Clause, b: Clause) -> bool:
    """True iff literals(a) ⊆ literals(b); then a & b is equivalent to a."""
    shared = a.cube_mask & b.cube_mask
    return shared == a.cube_mask and (a.cube_fix ^ b.cube_fix) & shared == 0


def parse_dimacs(text: str | bytes) -> Cnf:
    """Parse DIMACS CNF.  Clause order equals file order.

    Recognizes the extension comment ``c vars-main K`` marking the first K
    variables as main (projection targets); other comments are ignored.
    """
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    num_vars = None
    num_clauses = None
    num_main = None
    tokens: list[int] = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped:
            continue
        if stripped.startswith("c"):
            parts = stripped.split()
            if len(parts) == 3 and parts[1] == "vars-main":
                try:
                    num_main = int(parts[2])
                except ValueError:
                    raise ParseError(f"line {lineno}: bad vars-main count")
            continue
        if stripped.startswith("p"):
            if num_vars is not None:
                raise ParseError(f"line {lineno}: duplicate header")
            parts = stripped.split()
            if len(parts) != 4 or parts[0] != "p" or parts[1] != "cnf":
                raise ParseError(f"line {lineno}: malformed header {stripped!r}")
            try:
                num_vars, num_clauses = int(parts[2]), int(parts[3])
            except ValueError:
                raise ParseError(f"line {lineno}: malformed header {stripped!r}")
            if num_vars < 0 or num_clauses < 0:
                raise ParseError(f"line {lineno}: negative header counts")
            continue
        if num_vars is None:
            raise ParseError(f"line {lineno}: clause data before header")
        for tok in stripped.split():
            try:
                tokens.append(int(tok))
            except ValueError:
                raise ParseError(f"line {lineno}: bad token {tok!r}")
    if num_vars is None:
        raise ParseError("missing 'p cnf' header")

    clauses = []
    current: list[int] = []
    for lit in tokens:
        if lit == 0:
            clauses.append(Clause.from_ints(current))
            current = []
            continue
        if abs(lit) > num_vars:
            raise ParseError(f"literal {lit} exceeds declared {num_vars} variables")
        current.append(lit)
    if current:
        raise ParseError("unterminated clause at end of input")
    if len(clauses) != num_clauses:
        raise ParseError(f"header declares {num_clauses} clauses, found {len(clauses)}")
    if num_main is not None and num_main > num_vars:
        raise ParseError("vars-main exceeds declared variable count")
    return Cnf(tuple(clauses), num_vars, num_main)


def write_dimacs(f: Cnf) -> str:
    """Emit DIMACS; parse_dimacs(write_dimacs(f)) is structurally f."""
    lines = []
    if f.num_main is not None:
        lines.append(f"c vars-main {f.num_main}")
    lines.append(f"p cnf {f.num_vars} {len(f.clauses)}")
    for c in f.clauses:
        lines.append(" ".join(str(i) for i in c.to_ints() + (0,)))
    return "\n".join(lines) + "\n"
