"""Closed-form coefficients of the lambda-parameterized error bound.

All four quantities are absolute-kernel integrals over a half period and
have two algebraic branches meeting continuously at lambda = 1/2 (the Low
branch covers lambda <= 1/2). The test suite verifies every branch against
the adaptive-quadrature oracle, so an algebra slip here cannot survive.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

__all__ = [
    "Regime",
    "CoefficientSet",
    "moment",
    "coeff_a",
    "coeff_b",
    "coeff_total_q1",
    "coefficient_set",
]


class Regime(Enum):
    LOW = "Low"
    HIGH = "High"


def _check_lambda(lam: float) -> None:
    if not 0.0 <= lam <= 1.0:
        raise ValueError(f"lambda must be in [0, 1], got {lam!r}")


def _moment_low(lam: float) -> float:
    return lam**3 / 3.0 + (1.0 - 3.0 * lam) / 24.0


def _moment_high(lam: float) -> float:
    return (3.0 * lam - 1.0) / 24.0


def moment(lam: float) -> float:
    """Integral of |t (t - lam)| over [0, 1/2]: the power-mean prefactor base."""
    _check_lambda(lam)
    return _moment_low(lam) if lam <= 0.5 else _moment_high(lam)


def _coeff_a_low(lam: float) -> float:
    return lam * lam - (4.0 * lam - 1.0) / 8.0


def _coeff_a_high(lam: float) -> float:
    return (4.0 * lam - 1.0) / 8.0


def coeff_a(lam: float) -> float:
    """Weight of |f''(a)|^q in the first power-mean radical.

    Equals the integral of |t (t - lam)| / t over [0, 1/2]; positive for all
    lam (the low branch is (lam - 1/4)^2 + 1/16 in disguise).
    """
    _check_lambda(lam)
    return _coeff_a_low(lam) if lam <= 0.5 else _coeff_a_high(lam)


def _coeff_b_low(lam: float) -> float:
    one_m = 1.0 - lam
    return one_m * math.log(2.0 * one_m * one_m) + (20.0 * lam - 8.0 * lam * lam - 5.0) / 8.0


def _coeff_b_high(lam: float) -> float:
    return (5.0 - 4.0 * lam) / 8.0 - (lam - 1.0) * math.log(0.5)


def coeff_b(lam: float) -> float:
    """Weight of |f''(b)|^q in the first power-mean radical.

    Equals the integral of |t (t - lam)| / (1 - t) over [0, 1/2]. In the low
    branch 1 - lam >= 1/2, so the log argument 2 (1 - lam)^2 >= 1/2 is safe.
    """
    _check_lambda(lam)
    return _coeff_b_low(lam) if lam <= 0.5 else _coeff_b_high(lam)


def _total_q1_low(lam: float) -> float:
    one_m = 1.0 - lam
    return one_m * math.log(2.0 * one_m * one_m) + (16.0 * lam - 4.0) / 8.0


def _total_q1_high(lam: float) -> float:
    return (lam - 1.0) * math.log(2.0) + 0.5


def coeff_total_q1(lam: float) -> float:
    """Collapsed q = 1 coefficient; equals coeff_a + coeff_b."""
    _check_lambda(lam)
    return _total_q1_low(lam) if lam <= 0.5 else _total_q1_high(lam)


@dataclass(frozen=True)
class CoefficientSet:
    m: float
    a_coef: float
    b_coef: float
    c_q1: float
    regime: Regime


def coefficient_set(lam: float) -> CoefficientSet:
    """All four coefficients plus the regime tag, with a consistency check."""
    _check_lambda(lam)
    m = moment(lam)
    a = coeff_a(lam)
    b = coeff_b(lam)
    c = coeff_total_q1(lam)
    if abs(c - (a + b)) > 1e-12:
        raise RuntimeError(
            f"coefficient inconsistency at lambda={lam!r}: total {c!r} vs a+b {a + b!r}"
        )
    return CoefficientSet(m, a, b, c, Regime.LOW if lam <= 0.5 else Regime.HIGH)
