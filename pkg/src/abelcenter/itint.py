"""Iterated integrals of the Abel coefficients over the ordered simplex.

For an index word ``(i1, ..., ik)`` over ``{1, 2}`` the integral is

    I = int_{a <= s1 <= ... <= sk <= b} a_{ik}(sk) ... a_{i1}(s1) ds

with ``a_1 = p`` and ``a_2 = q``.  The first index is the innermost
variable.  Evaluation nests primitives: ``F_1 = int_a^x a_{i1}`` and
``F_m = int_a^x a_{im} F_{m-1}``; the result is ``F_k(b)``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .abelmodel import AbelEquation
from .polycore import UniPoly


class IndexTuple(tuple):
    """Non-empty word over ``{1, 2}``; ``order`` is the sum of its letters."""

    def __new__(cls, indices: Iterable[int]):
        items = tuple(int(i) for i in indices)
        if not items:
            raise ValueError("index tuple must be non-empty")
        if any(i not in (1, 2) for i in items):
            raise ValueError(f"index entries must be 1 or 2, got {items}")
        return super().__new__(cls, items)

    @property
    def order(self) -> int:
        return sum(self)

    def __repr__(self):
        return f"IndexTuple({tuple(self)!r})"

    def label(self) -> str:
        return "I_{" + ",".join(str(i) for i in self) + "}"


def _nested_primitive(eq: AbelEquation, t: Sequence[int], cache=None) -> UniPoly:
    if cache is not None and tuple(t) in cache:
        return cache[tuple(t)]
    if len(t) == 1:
        F = eq.coefficient(t[0]).antiderivative(eq.a)
    else:
        inner = _nested_primitive(eq, t[:-1], cache)
        F = (eq.coefficient(t[-1]) * inner).antiderivative(eq.a)
    if cache is not None:
        cache[tuple(t)] = F
    return F


def iterated_integral(eq: AbelEquation, t: Sequence[int]) -> Fraction:
    t = IndexTuple(t)
    return _nested_primitive(eq, t)(eq.b)


def iterated_integrals(eq: AbelEquation, tuples: Iterable[Sequence[int]]) -> dict[IndexTuple, Fraction]:
    """Evaluate many words at once, sharing primitives of common prefixes."""
    cache: dict = {}
    out = {}
    for t in tuples:
        t = IndexTuple(t)
        out[t] = _nested_primitive(eq, t, cache)(eq.b)
    return out


def compositions(n: int) -> list[IndexTuple]:
    """Words over ``{1, 2}`` of order exactly ``n``: shorter words first, then lexicographic."""
    if n < 1:
        return []

    def rec(m):
        if m == 0:
            return [()]
        out = []
        for first in (1, 2):
            if first <= m:
                out.extend((first,) + rest for rest in rec(m - first))
        return out

    return [IndexTuple(t) for t in sorted(rec(n), key=lambda t: (len(t), t))]


def all_index_tuples_up_to(N: int) -> list[IndexTuple]:
    if N < 1:
        raise ValueError("N must be at least 1")
    return [t for n in range(1, N + 1) for t in compositions(n)]
