"""Piecewise quadratic kernel and the exact error-functional identity.

The error functional

    E(lam, f) = (lam - 1) f((a+b)/2) - lam (f(a) + f(b))/2 + (1/(b-a)) int_a^b f

equals (b-a)^2 times the kernel-weighted integral of f'' over the unit
interval. Both sides are computed independently here so the equality can be
verified numerically for any parsed expression.
"""

from __future__ import annotations

from dataclasses import dataclass

from .expressions import Node, evaluate, evaluate_jet2
from .quadrature import Interval, QuadratureConfig, integrate, integrate_piecewise

__all__ = [
    "RuleParams",
    "IdentityReport",
    "kernel_k",
    "lhs_functional",
    "rhs_identity",
    "verify_identity",
]


@dataclass(frozen=True)
class RuleParams:
    """Rule parameter in [0, 1]: 0 is midpoint, 1/3 Simpson, 1/2 averaged
    midpoint-trapezoid, 1 trapezoid."""

    lam: float

    def __post_init__(self) -> None:
        if not 0.0 <= self.lam <= 1.0:
            raise ValueError(f"lambda must be in [0, 1], got {self.lam!r}")


@dataclass(frozen=True)
class IdentityReport:
    lhs: float
    rhs: float
    abs_diff: float


def kernel_k(t: float, p: RuleParams) -> float:
    """Piecewise quadratic weight on [0, 1]; t = 1/2 is served by the first branch.

    The second branch writes its last factor as (1/2 - lam) + (1/2 - t) so both
    branches agree bitwise at the joint for every lam.
    """
    if not 0.0 <= t <= 1.0:
        raise ValueError(f"t must be in [0, 1], got {t!r}")
    lam = p.lam
    if t <= 0.5:
        return 0.5 * t * (t - lam)
    return 0.5 * (1.0 - t) * ((0.5 - lam) + (0.5 - t))


def lhs_functional(
    e: Node, iv: Interval, p: RuleParams, cfg: QuadratureConfig | None = None
) -> float:
    """Quadrature error functional E(lam, f) with the integral taken numerically."""
    fa = evaluate(e, iv.a)
    fb = evaluate(e, iv.b)
    fm = evaluate(e, iv.midpoint)
    integral = integrate(lambda t: evaluate(e, t), iv, cfg)
    return (p.lam - 1.0) * fm - p.lam * 0.5 * (fa + fb) + integral / iv.width


def rhs_identity(
    e: Node, iv: Interval, p: RuleParams, cfg: QuadratureConfig | None = None
) -> float:
    """Kernel-weighted integral of f'' over [0, 1], scaled by width^2.

    Cuts at lam, 1/2 and 1 - lam are always passed; integrate_piecewise drops
    the ones that land outside (0, 1) or coincide.
    """
    a, b = iv.a, iv.b
    w = iv.width

    def integrand(t: float) -> float:
        return kernel_k(t, p) * evaluate_jet2(e, t * a + (1.0 - t) * b).d2

    cuts = [p.lam, 0.5, 1.0 - p.lam]
    return w * w * integrate_piecewise(integrand, Interval(0.0, 1.0), cuts, cfg)


def verify_identity(
    e: Node, iv: Interval, p: RuleParams, cfg: QuadratureConfig | None = None
) -> IdentityReport:
    """Compute both sides of the identity and their absolute difference."""
    lhs = lhs_functional(e, iv, p, cfg)
    rhs = rhs_identity(e, iv, p, cfg)
    return IdentityReport(lhs, rhs, abs(lhs - rhs))
