"""First-return map coefficients and finite-order center tests.

The return map expands as ``P(y0) = y0 + sum_n c_n y0^(n+1)`` with

    c_n = sum over words (i1..ik) of order n of  w(i1..ik) * I_{i1..ik}

where ``w`` is the product of ``n - (i1 + ... + ij) + 1`` over ``j``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .abelmodel import AbelEquation
from .itint import IndexTuple, all_index_tuples_up_to, compositions, iterated_integrals


@dataclass(frozen=True)
class CenterReport:
    order_checked: int
    all_zero: bool
    first_failure: Optional[tuple[int, Fraction]] = None
    coefficients: tuple[Fraction, ...] = ()

    def __post_init__(self):
        if self.all_zero != (self.first_failure is None):
            raise ValueError("all_zero must hold exactly when there is no failure")


@dataclass(frozen=True)
class UniversalReport:
    order_checked: int
    universal: bool
    witness: Optional[tuple[IndexTuple, Fraction]] = None

    def __post_init__(self):
        if self.universal != (self.witness is None):
            raise ValueError("universal must hold exactly when there is no witness")


def brudnyi_coefficient(t: Sequence[int]) -> int:
    t = IndexTuple(t)
    n = t.order
    c, partial = 1, 0
    for i in t:
        partial += i
        c *= n - partial + 1
    return c


def return_map_coefficients(eq: AbelEquation, N: int) -> list[Fraction]:
    """``[c_1, ..., c_N]``, sharing nested primitives across all words."""
    if N < 1:
        raise ValueError("N must be at least 1")
    values = iterated_integrals(eq, all_index_tuples_up_to(N))
    return [
        sum((brudnyi_coefficient(t) * values[t] for t in compositions(n)), Fraction(0))
        for n in range(1, N + 1)
    ]


def return_map_coefficient(eq: AbelEquation, n: int) -> Fraction:
    if n < 1:
        raise ValueError("n must be at least 1")
    values = iterated_integrals(eq, compositions(n))
    return sum((brudnyi_coefficient(t) * v for t, v in values.items()), Fraction(0))


def center_check(eq: AbelEquation, N: int) -> CenterReport:
    coeffs = return_map_coefficients(eq, N)
    for n, c in enumerate(coeffs, start=1):
        if c != 0:
            return CenterReport(N, False, (n, c), tuple(coeffs))
    return CenterReport(N, True, None, tuple(coeffs))


def universal_center_check(eq: AbelEquation, N: int) -> UniversalReport:
    # ascending order, lexicographic within an order
    values = iterated_integrals(eq, all_index_tuples_up_to(N))
    for t, v in values.items():
        if v != 0:
            return UniversalReport(N, False, (t, v))
    return UniversalReport(N, True, None)
