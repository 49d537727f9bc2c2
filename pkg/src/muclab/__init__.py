"""CNF structural-analysis lab: truth-vector classification, minimal
unsatisfiable cores, clause geometry, and orthogonalization."""

from .core import (Clause, Cnf, HornKind, Literal, horn_kind, is_horn,
                   normalize_clause, parse_dimacs, subsumes, write_dimacs)
from .errors import (BudgetExceeded, CyclicOrder, DuplicateVars,
                     InputSatisfiable, MuclabError, NotAbsorbable, NotHorn,
                     NotMuc, ParseError, TautologicalClause, UnknownExample,
                     VariableAlreadyPresent, VariableOutOfRange)
from .semantics import (DEFAULT_BUDGET, Assignment, ClassificationReport,
                        LogicalValueVector, classify, connected_components,
                        eval_clause, eval_cnf, logical_value_vector, project,
                        satisfying_set)
from .solvers import (MucVerdict, SatResult, brute_force_sat, dpll_sat,
                      horn_sat, is_muc_classification, is_muc_deletion,
                      shrink_to_muc)
from .geometry import (Cube, HornOrderGraph, clause_cycle, cnf_inner_harmony,
                       cnf_inner_product, falsifying_cube, horn_order,
                       inner_harmony, inner_product, phase_difference,
                       topological_order)
from .orthogonalize import (DEFAULT_CLAUSE_CAP, OrthogonalizationTrace,
                            TraceStep, clause_cut, orthogonalize_cnf,
                            orthogonalize_horn_muc, orthogonalize_pair,
                            total_order_check, verify_orthogonal_muc)
from .constructions import (ParityBlock, gen_horn_chain,
                            gen_parity_contradiction, gen_parity3,
                            gen_parity_n, worked_example)
from .experiment import (ExperimentConfig, GrowthRecord, GrowthReport,
                         emit_report, render_growth_figure,
                         run_growth_experiment)
from .cli import cli_dispatch

__version__ = "0.1.0"
