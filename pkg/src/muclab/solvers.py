"""Satisfiability decision and minimal-unsatisfiable-core checking.

Three solvers with increasing structure requirements: exhaustive enumeration
(the oracle everything else is tested against), a deterministic DPLL, and
unit-propagation for Horn inputs.  The core checker comes in two independent
flavors, by clause deletion and by truth-vector classification; their
agreement is itself a tested property.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import Cnf, HornKind, horn_kind, is_horn
from .errors import BudgetExceeded, InputSatisfiable, NotHorn
from .semantics import DEFAULT_BUDGET, Assignment, _falsity_matrix, classify


@dataclass(frozen=True)
class SatResult:
    satisfiable: bool
    witness: Assignment | None = None


@dataclass(frozen=True)
class MucVerdict:
    is_muc: bool
    failing_reason: str  # "ok" | "satisfiable" | "not-minimal" | "duplicate-clause"
    clause_index: int | None = None

    def describe(self) -> str:
        if self.failing_reason == "not-minimal":
            return f"not-minimal({self.clause_index})"
        return self.failing_reason


def brute_force_sat(f: Cnf, budget: int = DEFAULT_BUDGET) -> SatResult:
    """Exhaustive enumeration; witness is the lowest satisfying bit pattern."""
    if 2 ** f.num_vars > budget:
        raise BudgetExceeded(f"2^{f.num_vars} assignments exceed budget {budget}")
    if not f.clauses:
        return SatResult(True, Assignment(0, f.num_vars))
    sat = ~_falsity_matrix(f).any(axis=0)
    idx = np.flatnonzero(sat)
    if idx.size == 0:
        return SatResult(False)
    return SatResult(True, Assignment(int(idx[0]), f.num_vars))


def dpll_sat(f: Cnf) -> SatResult:
    """DPLL with unit propagation.

    Branching is the lowest-index unassigned variable, true branch first,
    so results (including witnesses) are deterministic.
    """
    clauses = [list(c.to_ints()) for c in f.clauses]
    assignment: dict[int, bool] = {}

    def lit_value(lit: int) -> bool | None:
        v = assignment.get(abs(lit))
        if v is None:
            return None
        return v if lit > 0 else not v

    def propagate(trail: list[int]) -> bool:
        # returns False on conflict; appends assigned vars to trail
        changed = True
        while changed:
            changed = False
            for clause in clauses:
                unassigned = None
                n_unassigned = 0
                satisfied = False
                for lit in clause:
                    val = lit_value(lit)
                    if val is True:
                        satisfied = True
                        break
                    if val is None:
                        n_unassigned += 1
                        unassigned = lit
                if satisfied:
                    continue
                if n_unassigned == 0:
                    return False
                if n_unassigned == 1:
                    assignment[abs(unassigned)] = unassigned > 0
                    trail.append(abs(unassigned))
                    changed = True
        return True

    def search() -> dict[int, bool] | None:
        trail: list[int] = []
        if not propagate(trail):
            for v in trail:
                del assignment[v]
            return None
        var = next((v for v in range(1, f.num_vars + 1) if v not in assignment), None)
        if var is None:
            return dict(assignment)
        for value in (True, False):
            assignment[var] = value
            model = search()
            if model is not None:
                return model
            del assignment[var]
        for v in trail:
            del assignment[v]
        return None

    model = search()
    if model is None:
        return SatResult(False)
    bits = 0
    for v, val in model.items():
        if val:
            bits |= 1 << (v - 1)
    return SatResult(True, Assignment(bits, f.num_vars))


def horn_sat(f: Cnf) -> SatResult:
    """Unit propagation to fixpoint on a Horn CNF.

    The witness on satisfiable input is the least model: propagated vars
    true, everything else false.
    """
    if not is_horn(f):
        raise NotHorn("input has a clause with two or more positive literals")
    model: set[int] = set()
    changed = True
    while changed:
        changed = False
        for c in f:
            head = next((l.var for l in c if l.polarity), None)
            if head is None or head in model:
                continue
            if all(l.var in model for l in c if not l.polarity):
                model.add(head)
                changed = True
    for c in f:
        if horn_kind(c) is HornKind.GOAL:
            if all(l.var in model for l in c):  # includes the empty clause
                return SatResult(False)
    bits = 0
    for v in model:
        bits |= 1 << (v - 1)
    return SatResult(True, Assignment(bits, f.num_vars))


def _solve(f: Cnf, solver: str, budget: int) -> SatResult:
    if solver == "brute":
        return brute_force_sat(f, budget)
    if solver == "dpll":
        return dpll_sat(f)
    if solver == "horn":
        return horn_sat(f)
    raise ValueError(f"unknown solver {solver!r}")


def is_muc_deletion(f: Cnf, solver: str = "dpll",
                    budget: int = DEFAULT_BUDGET) -> MucVerdict:
    """MUC check by clause deletion: f is unsat and every one-clause-removed
    subformula is sat."""
    if f.has_duplicate_clauses():
        return MucVerdict(False, "duplicate-clause")
    if _solve(f, solver, budget).satisfiable:
        return MucVerdict(False, "satisfiable")
    for i in range(len(f.clauses)):
        if not _solve(f.without_clause(i), solver, budget).satisfiable:
            return MucVerdict(False, "not-minimal", i)
    return MucVerdict(True, "ok")


def is_muc_classification(f: Cnf, budget: int = DEFAULT_BUDGET) -> MucVerdict:
    """MUC check by classification: the realized truth-vector set excludes
    the all-true vector and includes every one-false vector."""
    if f.has_duplicate_clauses():
        return MucVerdict(False, "duplicate-clause")
    report = classify(f, budget)
    if report.has_all_true:
        return MucVerdict(False, "satisfiable")
    for i in range(len(f.clauses)):
        if i not in report.cyclic_realized:
            return MucVerdict(False, "not-minimal", i)
    return MucVerdict(True, "ok")


def shrink_to_muc(f: Cnf, solver: str = "dpll", budget: int = DEFAULT_BUDGET) -> Cnf:
    """Deletion-based core extraction, scanning clauses in index order.

    Deterministic; the result passes is_muc_deletion.
    """
    if _solve(f, solver, budget).satisfiable:
        raise InputSatisfiable("cannot extract a core from a satisfiable CNF")
    kept = list(f.clauses)
    i = 0
    while i < len(kept):
        candidate = Cnf(tuple(kept[:i] + kept[i + 1:]), f.num_vars, f.num_main)
        if not _solve(candidate, solver, budget).satisfiable:
            del kept[i]
        else:
            i += 1
    return Cnf(tuple(kept), f.num_vars, f.num_main)
