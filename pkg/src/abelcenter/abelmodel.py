"""Polynomial Abel equations ``dy/dx = p(x) y^2 + q(x) y^3`` on ``[a, b]``."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .polycore import BiPoly, Scalar, UniPoly, as_rational


@dataclass(frozen=True)
class AbelEquation:
    p: UniPoly
    q: UniPoly
    a: Fraction
    b: Fraction

    def __post_init__(self):
        object.__setattr__(self, "a", as_rational(self.a))
        object.__setattr__(self, "b", as_rational(self.b))
        if not self.a < self.b:
            raise ValueError(f"interval must satisfy a < b, got [{self.a}, {self.b}]")

    def coefficient(self, index: int) -> UniPoly:
        """Index 1 selects ``p``, index 2 selects ``q``."""
        if index == 1:
            return self.p
        if index == 2:
            return self.q
        raise ValueError(f"coefficient index must be 1 or 2, got {index}")

    def tilde(self, which: str) -> UniPoly:
        """Primitive of ``p`` or ``q`` that vanishes at ``a``."""
        if which == "p":
            return self.p.antiderivative(self.a)
        if which == "q":
            return self.q.antiderivative(self.a)
        raise ValueError(f"which must be 'p' or 'q', got {which!r}")

    def vector_field(self) -> BiPoly:
        """The right-hand side ``p y^2 + q y^3`` as a polynomial in ``x, y``."""
        return BiPoly({2: self.p, 3: self.q})

    def scaled(self, lam: Scalar) -> "AbelEquation":
        """``(lam p, lam^2 q)``; multiplies each iterated integral by ``lam^order``."""
        lam = as_rational(lam)
        return AbelEquation(self.p.scale(lam), self.q.scale(lam * lam), self.a, self.b)


@dataclass(frozen=True)
class CompositionWitness:
    """``w`` periodic on ``[a, b]`` with ``p~ = p1(w)`` and ``q~ = q1(w)``."""

    w: UniPoly
    p1: UniPoly
    q1: UniPoly

    def check(self, eq: AbelEquation) -> bool:
        return (
            self.w(eq.a) == self.w(eq.b)
            and self.p1.compose(self.w) == eq.tilde("p")
            and self.q1.compose(self.w) == eq.tilde("q")
        )


def paper_counterexample() -> AbelEquation:
    """Degree 4/9 equation with a center that admits no composition factor."""
    p = UniPoly([2, 0, -30, 0, 40])
    q = UniPoly([0, -3, 0, -10, 0, 88, 0, -150, 0, 75])
    return AbelEquation(p, q, Fraction(-1), Fraction(1))


def paper_curves() -> dict[str, BiPoly]:
    """Invariant algebraic curves of :func:`paper_counterexample`."""
    f1 = BiPoly.from_terms({
        (0, 0): 2, (1, 1): 8, (3, 1): -24, (5, 1): 16,
        (0, 2): 1, (2, 2): 2, (4, 2): -34, (6, 2): 88, (8, 2): -87, (10, 2): 30,
    }).scale(Fraction(1, 2))
    f2 = BiPoly.from_terms({
        (0, 0): 3, (1, 1): 12, (3, 1): -42, (5, 1): 30,
        (0, 2): 2, (2, 2): 3, (4, 2): -72, (6, 2): 202, (8, 2): -210, (10, 2): 75,
    }).scale(Fraction(1, 3))
    f3 = BiPoly.from_terms({(0, 0): 1, (1, 1): 3, (3, 1): -8, (5, 1): 5})
    return {"f1": f1, "f2": f2, "f3": f3}


def from_composition(
    w: UniPoly, p1: UniPoly, q1: UniPoly, a: Scalar, b: Scalar
) -> tuple[AbelEquation, CompositionWitness]:
    """Build ``p = p1'(w) w'``, ``q = q1'(w) w'``, which has a center on ``[a, b]``.

    The witness shifts ``p1`` and ``q1`` by constants so that both vanish at
    ``w(a)``; then ``p1(w)`` is exactly the primitive of ``p`` from ``a``.
    """
    a, b = as_rational(a), as_rational(b)
    wa = w(a)
    if wa != w(b):
        raise ValueError("witness not periodic")
    dw = w.derivative()
    p = p1.derivative().compose(w) * dw
    q = q1.derivative().compose(w) * dw
    eq = AbelEquation(p, q, a, b)
    witness = CompositionWitness(w, p1 - p1(wa), q1 - q1(wa))
    return eq, witness
