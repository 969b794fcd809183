"""Invariant curves, cofactors and Darboux first integrals of Abel equations.

A curve ``F`` is invariant when its derivative along the flow,
``F_x + (p y^2 + q y^3) F_y``, equals ``K F`` for a polynomial cofactor
``K``.  A product ``H = y^m0 * prod f_i^m_i`` is a first integral exactly
when ``m0 (p y + q y^2) + sum m_i K_i`` vanishes, since ``y`` itself is
invariant with cofactor ``p y + q y^2``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .abelmodel import AbelEquation
from .polycore import BiPoly, Scalar, UniPoly, as_rational


class SingularEndpointError(ArithmeticError):
    pass


@dataclass(frozen=True)
class DarbouxCandidate:
    """``y^y_exponent * prod(curve^exponent)``; the empty product is the constant 1."""

    y_exponent: int
    factors: tuple[tuple[BiPoly, int], ...] = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple((f, int(m)) for f, m in self.factors))
        if any(f.is_zero() for f, _ in self.factors):
            raise ValueError("curves in a Darboux product must be nonzero")


@dataclass(frozen=True)
class FirstIntegralCheck:
    holds: bool
    identity: Optional[BiPoly] = None
    missing_cofactor: Optional[int] = None

    def __bool__(self):
        return self.holds


def lie_derivative(eq: AbelEquation, F: BiPoly) -> BiPoly:
    return F.partial_x() + eq.vector_field() * F.partial_y()


def cofactor(eq: AbelEquation, F: BiPoly) -> Optional[BiPoly]:
    if F.is_zero():
        raise ZeroDivisionError("the zero polynomial has no cofactor")
    return lie_derivative(eq, F).divide_y(F)


def check_first_integral(eq: AbelEquation, cand: DarbouxCandidate) -> FirstIntegralCheck:
    """Evaluate the cofactor identity; report which factor lacks a cofactor, if any."""
    total = BiPoly({1: eq.p, 2: eq.q}).scale(cand.y_exponent)
    for idx, (f, m) in enumerate(cand.factors):
        K = cofactor(eq, f)
        if K is None:
            return FirstIntegralCheck(False, None, idx)
        total = total + K.scale(m)
    return FirstIntegralCheck(total.is_zero(), total, None)


def verify_first_integral(eq: AbelEquation, cand: DarbouxCandidate) -> bool:
    return check_first_integral(eq, cand).holds


def endpoint_profile(cand: DarbouxCandidate, x0: Scalar) -> tuple[UniPoly, UniPoly]:
    """Numerator and denominator in ``y`` of the candidate at ``x = x0``.

    Only a common constant factor is removed (denominator made monic); no
    polynomial gcd is taken.
    """
    x0 = as_rational(x0)
    num = UniPoly([1])
    den = UniPoly([1])
    m0 = cand.y_exponent
    if m0 > 0:
        num = num * UniPoly.monomial(m0)
    elif m0 < 0:
        den = den * UniPoly.monomial(-m0)
    for f, m in cand.factors:
        g = f.eval_x(x0)
        if m > 0:
            num = num * g ** m
        elif m < 0:
            den = den * g ** (-m)
    if den.is_zero():
        raise SingularEndpointError(f"first integral singular at endpoint x = {x0}")
    lc = den.leading
    return num.scale(1 / lc), den.scale(1 / lc)
