"""Exception types shared across the toolkit."""


class MuclabError(Exception):
    """Base class for all toolkit errors."""


class TautologicalClause(MuclabError):
    """A variable occurs with both polarities in one clause."""


class ParseError(MuclabError):
    """Malformed DIMACS input."""


class VariableOutOfRange(MuclabError):
    """An assignment does not cover a variable referenced by a clause."""


class BudgetExceeded(MuclabError):
    """Exhaustive enumeration would exceed the configured budget."""


class NotHorn(MuclabError):
    """Operation requires a Horn CNF."""


class NotMuc(MuclabError):
    """Operation requires a minimal unsatisfiable core."""


class InputSatisfiable(MuclabError):
    """Operation requires an unsatisfiable CNF."""


class CyclicOrder(MuclabError):
    """The Horn implication order contains a cycle."""


class VariableAlreadyPresent(MuclabError):
    """Cut variable already occurs in the clause."""


class NotAbsorbable(MuclabError):
    """Residual branch of a pairwise orthogonalization is not subsumed by the reference."""


class DuplicateVars(MuclabError):
    """Construction called with repeated variable ids."""


class UnknownExample(MuclabError):
    """No catalogued formula under that name."""
