"""Deciding the composition condition and evaluating moments.

The condition asks for polynomials ``w, p1, q1`` with ``w(a) = w(b)``,
``p~ = p1(w)`` and ``q~ = q1(w)``.  Any such ``w`` has a degree ``d >= 2``
dividing the degrees of both nonzero primitives.  Over a field of
characteristic zero a right composition factor of fixed degree is unique up
to ``w -> lam*w + mu``, so it suffices to test one normalized (monic, zero
constant term) candidate per divisor.  Periodicity is unaffected by that
affine change.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Optional

from .abelmodel import AbelEquation, CompositionWitness
from .polycore import UniPoly

REASONS = (
    "no-common-degree",
    "no-right-factor",
    "factor-not-periodic",
    "partner-not-composed",
    "trivial-nonzero-linear",
)

# later stages of the per-divisor pipeline win when reporting a failure
_STAGE = {"no-right-factor": 0, "factor-not-periodic": 1, "partner-not-composed": 2}


@dataclass(frozen=True)
class CompositionVerdict:
    holds: bool
    witness: Optional[CompositionWitness] = None
    reason: Optional[str] = None

    def __post_init__(self):
        if self.holds != (self.witness is not None):
            raise ValueError("holds must be true exactly when a witness is present")
        if not self.holds and self.reason not in REASONS:
            raise ValueError(f"unknown failure reason {self.reason!r}")


def right_factor_candidate(f: UniPoly, d: int) -> Optional[UniPoly]:
    """Monic, zero-constant ``h`` of degree ``d`` that ``f`` would have to factor through.

    With ``r = deg f / d`` and ``f`` made monic, the coefficients of
    ``x^(n-1) ... x^(n-d+1)`` in ``f`` equal those of ``h^r``: lower powers
    of ``h`` cannot reach them.  Each fixes one coefficient of ``h``.  The
    result still has to be confirmed with :func:`decompose_as`.
    """
    if f.is_constant():
        raise ValueError("f must be nonconstant")
    n = f.degree
    if d < 1 or n % d:
        raise ValueError(f"degree {d} does not divide deg f = {n}")
    r = n // d
    F = f.monic()
    h = [Fraction(0)] * d + [Fraction(1)]
    for k in range(1, d):
        h[d - k] = Fraction(0)
        current = UniPoly(h) ** r
        h[d - k] = (F.coeff(n - k) - current.coeff(n - k)) / r
    return UniPoly(h)


def h_adic_expansion(f: UniPoly, h: UniPoly) -> list[UniPoly]:
    """Digits ``r_i`` with ``f = sum r_i h^i`` and ``deg r_i < deg h``."""
    if h.is_constant():
        raise ValueError("h must be nonconstant")
    digits = []
    while not f.is_zero():
        f, r = f.divmod(h)
        digits.append(r)
    return digits


def decompose_as(f: UniPoly, h: UniPoly) -> Optional[UniPoly]:
    """``g`` with ``f = g(h)``, or ``None`` if some h-adic digit is not constant."""
    digits = h_adic_expansion(f, h)
    if any(not r.is_constant() for r in digits):
        return None
    return UniPoly(r.coeff(0) for r in digits)


def _divisors_desc(n: int) -> list[int]:
    return [d for d in range(n, 1, -1) if n % d == 0]


def composition_condition(eq: AbelEquation) -> CompositionVerdict:
    P, Q = eq.tilde("p"), eq.tilde("q")
    a, b = eq.a, eq.b

    if P.is_zero() and Q.is_zero():
        zero = UniPoly()
        return CompositionVerdict(True, CompositionWitness(zero, zero, zero))

    nonzero = [f for f in (P, Q) if not f.is_zero()]
    if any(f.degree == 1 for f in nonzero):
        return CompositionVerdict(False, reason="trivial-nonzero-linear")

    if len(nonzero) == 1:
        base, partner = nonzero[0], None
        degrees = _divisors_desc(base.degree)
    else:
        # extract from the smaller degree; on a tie use P
        base, partner = (P, Q) if P.degree <= Q.degree else (Q, P)
        degrees = _divisors_desc(gcd(P.degree, Q.degree))
        if not degrees:
            return CompositionVerdict(False, reason="no-common-degree")

    worst = None
    for d in degrees:
        h = right_factor_candidate(base, d)
        g_base = decompose_as(base, h) if h is not None else None
        if g_base is None:
            stage = "no-right-factor"
        elif h(a) != h(b):
            stage = "factor-not-periodic"
        else:
            g_partner = decompose_as(partner, h) if partner is not None else UniPoly()
            if g_partner is None:
                stage = "partner-not-composed"
            else:
                g_p, g_q = (g_base, g_partner) if base is P else (g_partner, g_base)
                witness = CompositionWitness(h, g_p, g_q)
                if not witness.check(eq):
                    raise AssertionError("composition witness failed verification")
                return CompositionVerdict(True, witness)
        if worst is None or _STAGE[stage] > _STAGE[worst]:
            worst = stage
    return CompositionVerdict(False, reason=worst)


def moment(eq: AbelEquation, i: int, j: int, weight: str = "p") -> Fraction:
    """``int_a^b p~^i q~^j w dx`` with ``w`` either ``p`` or ``q``."""
    if i < 0 or j < 0:
        raise ValueError("moment exponents must be non-negative")
    if weight not in ("p", "q"):
        raise ValueError(f"weight must be 'p' or 'q', got {weight!r}")
    w = eq.p if weight == "p" else eq.q
    integrand = eq.tilde("p") ** i * eq.tilde("q") ** j * w
    return integrand.definite_integral(eq.a, eq.b)
