"""Exact computations around powers of monomial ideals.

The package computes associated primes of the graded pieces I^n/I^(n+1) by
two independent routes, Ratliff-Rush closures with stabilization
certificates, torsion-degree scans on the associated graded ring, extreme
rays and generator enumeration for rational polyhedral cones, and the
explicit stabilization threshold B = max(B1, B2), all in exact arithmetic.
"""

from .errors import (
    BUDGET_ENV_VAR,
    DEFAULT_BUDGET,
    BudgetError,
    InconsistencyError,
    InputError,
    ParseError,
    enumeration_budget,
)
from .monomials import (
    Monomial,
    MonomialIdeal,
    add,
    colon_ideal,
    colon_monomial,
    contains_ideal,
    delete_variable,
    intersect,
    intersect_all,
    minimize,
    power,
    product,
    saturate,
    unit_ideal,
    zero_ideal,
)
from .radicals import ExactRadical, RadicalSum
from .ioformats import (
    ideal_to_json,
    ideal_to_text,
    load_ideal,
    load_system,
    parse_ideal_json,
    parse_ideal_text,
    parse_system_json,
    parse_system_text,
    system_to_json,
    system_to_text,
)
from .assprimes import (
    AssProfile,
    ass_of_quotient,
    ass_power,
    ass_profile,
    max_ideal_in_ass,
)
from .cohomology import (
    A0Result,
    H0Report,
    RRResult,
    a0_observed,
    h0_m_monomials,
    ratliff_rush,
)
from .polyhedra import (
    ConeGenerators,
    ConstraintSystem,
    bound_a1,
    bound_a2,
    build_system,
    decompose_module,
    designated_generator,
    extreme_rays,
    greedy_decompose,
    hilbert_generators,
    module_generators,
    solve_feasible,
    staircase_system,
)
from .bounds import (
    BoundReport,
    ComparisonReport,
    bound_b1,
    bound_b2,
    bound_b3,
    bound_b4,
    bound_report,
    compare_with_observed,
    ideal_parameters,
    stabilization_bound,
)

__version__ = "0.1.0"

__all__ = [
    "BUDGET_ENV_VAR",
    "DEFAULT_BUDGET",
    "BudgetError",
    "InconsistencyError",
    "InputError",
    "ParseError",
    "enumeration_budget",
    "Monomial",
    "MonomialIdeal",
    "add",
    "colon_ideal",
    "colon_monomial",
    "contains_ideal",
    "delete_variable",
    "intersect",
    "intersect_all",
    "minimize",
    "power",
    "product",
    "saturate",
    "unit_ideal",
    "zero_ideal",
    "ExactRadical",
    "RadicalSum",
    "ideal_to_json",
    "ideal_to_text",
    "load_ideal",
    "load_system",
    "parse_ideal_json",
    "parse_ideal_text",
    "parse_system_json",
    "parse_system_text",
    "system_to_json",
    "system_to_text",
    "AssProfile",
    "ass_of_quotient",
    "ass_power",
    "ass_profile",
    "max_ideal_in_ass",
    "A0Result",
    "H0Report",
    "RRResult",
    "a0_observed",
    "h0_m_monomials",
    "ratliff_rush",
    "ConeGenerators",
    "ConstraintSystem",
    "bound_a1",
    "bound_a2",
    "build_system",
    "decompose_module",
    "designated_generator",
    "extreme_rays",
    "greedy_decompose",
    "hilbert_generators",
    "module_generators",
    "solve_feasible",
    "staircase_system",
    "BoundReport",
    "ComparisonReport",
    "bound_b1",
    "bound_b2",
    "bound_b3",
    "bound_b4",
    "bound_report",
    "compare_with_observed",
    "ideal_parameters",
    "stabilization_bound",
    "__version__",
]
