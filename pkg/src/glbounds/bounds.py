"""Error-bound evaluators and report assembly.

theorem_bound is the general power-mean bound; corollary_bound_q1 is its
q = 1 collapse coded separately; proposition_bound holds the rule-specific
specializations coded verbatim from their printed constants. Keeping three
independent codings of the same mathematics lets the test suite cross-check
them against each other and against the quadrature oracle.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .coefficients import Regime, coeff_total_q1, coefficient_set
from .expressions import Node, evaluate, evaluate_jet2
from .kernel import RuleParams, lhs_functional
from .qclass import DEFAULT_GRID_N, DEFAULT_TOL, membership_for_bound
from .quadrature import Interval, QuadratureConfig, integrate

__all__ = [
    "MembershipStatus",
    "MembershipMode",
    "BoundInput",
    "BoundReport",
    "Proposition",
    "HermiteHadamardReport",
    "theorem_bound",
    "corollary_bound_q1",
    "proposition_bound",
    "evaluate_bound_report",
    "hermite_hadamard_check",
]


class MembershipStatus(Enum):
    CERTIFIED = "Certified"
    CHECKED_PASS = "CheckedPass"
    CHECKED_FAIL = "CheckedFail"
    UNCHECKED = "Unchecked"


class MembershipMode(Enum):
    CERTIFIED = "certified"  # caller vouches for |f''|^q membership
    CHECK = "check"  # run the grid falsification scan
    SKIP = "skip"  # report without any membership claim


def _check_lambda(lam: float) -> None:
    if not 0.0 <= lam <= 1.0:
        raise ValueError(f"lambda must be in [0, 1], got {lam!r}")


def _check_q(q: float) -> None:
    if not (q >= 1.0 and math.isfinite(q)):
        raise ValueError(f"q must be finite and >= 1, got {q!r}")


def _check_weight(name: str, g: float) -> None:
    if not (g >= 0.0 and math.isfinite(g)):
        raise ValueError(f"{name} must be finite and >= 0, got {g!r}")


@dataclass(frozen=True)
class BoundInput:
    iv: Interval
    lam: float
    q: float
    g_a: float  # |f''(a)|
    g_b: float  # |f''(b)|

    def __post_init__(self) -> None:
        _check_lambda(self.lam)
        _check_q(self.q)
        _check_weight("g_a", self.g_a)
        _check_weight("g_b", self.g_b)


@dataclass(frozen=True)
class BoundReport:
    lhs_abs: float
    bound: float
    ratio: float | None  # None when bound == 0 (only with g_a = g_b = 0)
    regime: Regime
    q_membership: MembershipStatus


def theorem_bound(inp: BoundInput) -> float:
    """General bound: (w^2/2) M^(1-1/q) [(A ga^q + B gb^q)^(1/q) + (B ga^q + A gb^q)^(1/q)].

    A single formula covers both regimes via the coefficient dispatch; at
    q = 1 the prefactor exponent vanishes and the bracket collapses to
    (A + B)(ga + gb).
    """
    cs = coefficient_set(inp.lam)
    inv_q = 1.0 / inp.q
    ga_q = inp.g_a**inp.q
    gb_q = inp.g_b**inp.q
    bracket = (cs.a_coef * ga_q + cs.b_coef * gb_q) ** inv_q + (
        cs.b_coef * ga_q + cs.a_coef * gb_q
    ) ** inv_q
    w = inp.iv.width
    return 0.5 * w * w * cs.m ** (1.0 - inv_q) * bracket


def corollary_bound_q1(iv: Interval, lam: float, g_a: float, g_b: float) -> float:
    """q = 1 bound via the collapsed total coefficient; cross-checks theorem_bound."""
    _check_lambda(lam)
    _check_weight("g_a", g_a)
    _check_weight("g_b", g_b)
    w = iv.width
    return 0.5 * w * w * coeff_total_q1(lam) * (g_a + g_b)


class Proposition(Enum):
    """Rule-specific specializations (lambda pinned; Q1 variants also pin q = 1)."""

    MIDPOINT_Q1 = "midpoint-q1"  # lam = 0
    TRAPEZOID_Q1 = "trapezoid-q1"  # lam = 1
    SIMPSON_Q1 = "simpson-q1"  # lam = 1/3
    MIDTRAP_Q1 = "midpoint-trapezoid-q1"  # lam = 1/2
    MIDPOINT_PM = "midpoint-power-mean"  # lam = 0, q >= 1
    TRAPEZOID_PM = "trapezoid-power-mean"  # lam = 1, q >= 1
    SIMPSON_PM = "simpson-power-mean"  # lam = 1/3, q >= 1


_Q1_ONLY = (
    Proposition.MIDPOINT_Q1,
    Proposition.TRAPEZOID_Q1,
    Proposition.SIMPSON_Q1,
    Proposition.MIDTRAP_Q1,
)

# (same-endpoint weight, cross-endpoint weight, prefactor base)
_PM_CONSTANTS = {
    Proposition.MIDPOINT_PM: (1.0 / 8.0, math.log(2.0) - 5.0 / 8.0, 1.0 / 24.0),
    Proposition.TRAPEZOID_PM: (3.0 / 8.0, 1.0 / 8.0, 1.0 / 12.0),
    Proposition.SIMPSON_PM: (
        5.0 / 72.0,
        (2.0 / 3.0) * math.log(8.0 / 9.0) + 7.0 / 72.0,
        1.0 / 81.0,
    ),
}


def proposition_bound(
    which: Proposition, iv: Interval, q: float, g_a: float, g_b: float
) -> float:
    """Specialized bounds coded directly from their printed constants.

    Intentionally independent of the coefficient module so the suite can
    cross-validate two codings of the same mathematics.
    """
    _check_q(q)
    _check_weight("g_a", g_a)
    _check_weight("g_b", g_b)
    w2 = iv.width * iv.width
    if which in _Q1_ONLY:
        if q != 1.0:
            raise ValueError(f"{which.value} requires q = 1, got q = {q!r}")
        total = g_a + g_b
        if which is Proposition.MIDPOINT_Q1:
            return 0.25 * w2 * math.log(4.0 / math.e) * total
        if which is Proposition.TRAPEZOID_Q1:
            return 0.5 * w2 * 0.5 * total
        if which is Proposition.SIMPSON_Q1:
            return 0.5 * w2 * ((2.0 / 3.0) * math.log(8.0 / 9.0) + 1.0 / 6.0) * total
        return 0.25 * w2 * (math.log(0.5) + 1.0) * total
    same, cross, base = _PM_CONSTANTS[which]
    inv_q = 1.0 / q
    ga_q = g_a**q
    gb_q = g_b**q
    bracket = (same * ga_q + cross * gb_q) ** inv_q + (cross * ga_q + same * gb_q) ** inv_q
    return 0.5 * w2 * base ** (1.0 - inv_q) * bracket


def evaluate_bound_report(
    e: Node,
    iv: Interval,
    lam: float,
    q: float,
    cfg: QuadratureConfig | None = None,
    membership_mode: MembershipMode = MembershipMode.CHECK,
    grid_n: int = DEFAULT_GRID_N,
    tol: float = DEFAULT_TOL,
) -> BoundReport:
    """Tie the measured |E(lam, f)| to its bound, with membership gating.

    The inequality is only a claim when membership is Certified or
    CheckedPass; a CheckedFail report still carries lhs/bound for inspection
    (the bound may genuinely fail there, which is informative).
    """
    g_a = abs(evaluate_jet2(e, iv.a).d2)
    g_b = abs(evaluate_jet2(e, iv.b).d2)
    inp = BoundInput(iv, lam, q, g_a, g_b)
    lhs_abs = abs(lhs_functional(e, iv, RuleParams(lam), cfg))
    bound = theorem_bound(inp)
    ratio = lhs_abs / bound if bound > 0.0 else None
    if membership_mode is MembershipMode.CERTIFIED:
        status = MembershipStatus.CERTIFIED
    elif membership_mode is MembershipMode.SKIP:
        status = MembershipStatus.UNCHECKED
    else:
        scan = membership_for_bound(e, iv, q, grid_n, tol)
        status = MembershipStatus.CHECKED_PASS if scan.passed else MembershipStatus.CHECKED_FAIL
    return BoundReport(lhs_abs, bound, ratio, coefficient_set(lam).regime, status)


@dataclass(frozen=True)
class HermiteHadamardReport:
    lower: float
    mid: float
    upper: float
    holds: bool


def hermite_hadamard_check(
    e: Node,
    iv: Interval,
    cfg: QuadratureConfig | None = None,
    tol: float = 1e-9,
    grid_n: int = 101,
) -> HermiteHadamardReport:
    """Midpoint value <= mean integral <= endpoint average, for convex f.

    Convexity is a caller assertion, screened numerically by requiring
    f'' >= -1e-9 on an interior sample grid.
    """
    for i in range(grid_n):
        x = iv.a + iv.width * (i + 0.5) / grid_n
        if evaluate_jet2(e, x).d2 < -1e-9:
            raise ValueError(f"convexity sample check failed at x={x!r}")
    lower = evaluate(e, iv.midpoint)
    mid = integrate(lambda t: evaluate(e, t), iv, cfg) / iv.width
    upper = 0.5 * (evaluate(e, iv.a) + evaluate(e, iv.b))
    holds = lower <= mid + tol and mid <= upper + tol
    return HermiteHadamardReport(lower, mid, upper, holds)
