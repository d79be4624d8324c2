"""Quadrature error bounds over the Godunova-Levin function class.

A single parameter lambda in [0, 1] blends the midpoint (0), Simpson (1/3),
averaged midpoint-trapezoid (1/2) and trapezoid (1) rules. For twice
differentiable f whose |f''|^q belongs to the Godunova-Levin class, the
quadrature error admits closed-form bounds built from |f''| at the endpoints.
This package implements the exact error identity, the bound coefficients and
evaluators, a membership falsification checker, and the numeric oracles that
verify all of it.
"""

from .bounds import (
    BoundInput,
    BoundReport,
    HermiteHadamardReport,
    MembershipMode,
    MembershipStatus,
    Proposition,
    corollary_bound_q1,
    evaluate_bound_report,
    hermite_hadamard_check,
    proposition_bound,
    theorem_bound,
)
from .coefficients import (
    CoefficientSet,
    Regime,
    coeff_a,
    coeff_b,
    coeff_total_q1,
    coefficient_set,
    moment,
)
from .corpus import CorpusEntry, ExpectedMembership, corpus_entries
from .expressions import (
    DomainError,
    ExpressionError,
    Jet2,
    NonSmoothError,
    ParseError,
    evaluate,
    evaluate_jet2,
    parse,
    to_text,
)
from .kernel import IdentityReport, RuleParams, kernel_k, lhs_functional, rhs_identity, verify_identity
from .qclass import (
    QClassReport,
    Violation,
    check_godunova_levin,
    membership_for_bound,
    nonneg_convex_witness,
)
from .quadrature import (
    DepthExhaustedError,
    Interval,
    NonFiniteValueError,
    QuadratureConfig,
    QuadratureError,
    integrate,
    integrate_piecewise,
    second_derivative_fd,
)

__version__ = "0.1.0"

__all__ = [
    "BoundInput",
    "BoundReport",
    "CoefficientSet",
    "CorpusEntry",
    "DepthExhaustedError",
    "DomainError",
    "ExpectedMembership",
    "ExpressionError",
    "HermiteHadamardReport",
    "IdentityReport",
    "Interval",
    "Jet2",
    "MembershipMode",
    "MembershipStatus",
    "NonFiniteValueError",
    "NonSmoothError",
    "ParseError",
    "Proposition",
    "QClassReport",
    "QuadratureConfig",
    "QuadratureError",
    "Regime",
    "RuleParams",
    "Violation",
    "check_godunova_levin",
    "coeff_a",
    "coeff_b",
    "coeff_total_q1",
    "coefficient_set",
    "corollary_bound_q1",
    "corpus_entries",
    "evaluate",
    "evaluate_bound_report",
    "evaluate_jet2",
    "hermite_hadamard_check",
    "integrate",
    "integrate_piecewise",
    "kernel_k",
    "lhs_functional",
    "membership_for_bound",
    "moment",
    "nonneg_convex_witness",
    "parse",
    "proposition_bound",
    "rhs_identity",
    "second_derivative_fd",
    "theorem_bound",
    "to_text",
    "verify_identity",
]
