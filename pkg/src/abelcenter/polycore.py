"""Exact univariate and bivariate polynomial arithmetic over the rationals.

Scalars are :class:`fractions.Fraction`, which is always stored in lowest
terms with a positive denominator.  ``UniPoly`` keeps dense ascending
coefficients; ``BiPoly`` keeps one ``UniPoly`` in ``x`` per power of ``y``.
Both are immutable and canonical after every operation, so ``==`` is
structural equality.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Optional, Union

Rational = Fraction
Scalar = Union[int, Fraction]

#: Degree of the zero polynomial.
NEG_INF = float("-inf")


def as_rational(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool) or not isinstance(value, (int, str)):
        raise TypeError(f"expected an exact rational, got {value!r}")
    return Fraction(value)


def format_rational(value: Fraction) -> str:
    """``num/den`` in lowest terms, or a bare integer when ``den == 1``."""
    value = as_rational(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


class UniPoly:
    """Dense polynomial in one variable; ``coeffs[i]`` multiplies ``x**i``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        cs = [as_rational(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("UniPoly is immutable")

    @classmethod
    def constant(cls, c: Scalar) -> "UniPoly":
        return cls([c])

    @classmethod
    def monomial(cls, k: int, c: Scalar = 1) -> "UniPoly":
        return cls([0] * k + [c])

    @classmethod
    def x(cls) -> "UniPoly":
        return cls([0, 1])

    # -- basic queries -------------------------------------------------

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def coeff(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def __eq__(self, other):
        if isinstance(other, UniPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == UniPoly([other]).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(("UniPoly", self.coeffs))

    def __bool__(self):
        return bool(self.coeffs)

    def __repr__(self):
        return f"UniPoly([{', '.join(format_rational(c) for c in self.coeffs)}])"

    def __str__(self):
        return self.format("x")

    def format(self, var: str = "x") -> str:
        return _format_terms(((c, _power(var, i)) for i, c in enumerate(self.coeffs)))

    # -- ring operations -----------------------------------------------

    def __add__(self, other):
        other = _coerce_uni(other)
        if other is None:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return UniPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return UniPoly(-c for c in self.coeffs)

    def __sub__(self, other):
        other = _coerce_uni(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce_uni(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.scale(other)
        if not isinstance(other, UniPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return UniPoly()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca == 0:
                continue
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
        return UniPoly(out)

    __rmul__ = __mul__

    def scale(self, c: Scalar) -> "UniPoly":
        c = as_rational(c)
        return UniPoly(c * a for a in self.coeffs)

    def __pow__(self, n: int) -> "UniPoly":
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result, base = UniPoly([1]), self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def divmod(self, other: "UniPoly") -> tuple["UniPoly", "UniPoly"]:
        """Euclidean division over the rationals."""
        if other.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        rem = list(self.coeffs)
        dg = len(other.coeffs) - 1
        lc = other.coeffs[-1]
        if len(rem) <= dg:
            return UniPoly(), self
        quot = [Fraction(0)] * (len(rem) - dg)
        for k in range(len(rem) - 1, dg - 1, -1):
            c = rem[k] / lc
            if c == 0:
                continue
            quot[k - dg] = c
            for j, oc in enumerate(other.coeffs):
                rem[k - dg + j] -= c * oc
        return UniPoly(quot), UniPoly(rem[:dg])

    def exact_div(self, other: "UniPoly") -> Optional["UniPoly"]:
        q, r = self.divmod(other)
        return q if r.is_zero() else None

    # -- calculus and evaluation ---------------------------------------

    def __call__(self, x0):
        """Horner evaluation; ``x0`` may be a rational, a float or a UniPoly."""
        if isinstance(x0, UniPoly):
            return self.compose(x0)
        if isinstance(x0, float):
            acc = 0.0
            for c in reversed(self.coeffs):
                acc = acc * x0 + float(c)
            return acc
        x0 = as_rational(x0)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x0 + c
        return acc

    def compose(self, inner: "UniPoly") -> "UniPoly":
        """``self(inner(x))`` by Horner's scheme."""
        acc = UniPoly()
        for c in reversed(self.coeffs):
            acc = acc * inner + c
        return acc

    def derivative(self) -> "UniPoly":
        return UniPoly(i * c for i, c in enumerate(self.coeffs) if i)

    def antiderivative(self, a: Scalar = 0) -> "UniPoly":
        """The primitive that vanishes at ``a``."""
        if not self.coeffs:
            return UniPoly()
        F = [Fraction(0)] + [c / (i + 1) for i, c in enumerate(self.coeffs)]
        shift = UniPoly(F)(as_rational(a))
        F[0] -= shift
        return UniPoly(F)

    def definite_integral(self, a: Scalar, b: Scalar) -> Fraction:
        F = self.antiderivative(0)
        return F(as_rational(b)) - F(as_rational(a))

    def monic(self) -> "UniPoly":
        if self.is_zero():
            return self
        return self.scale(1 / self.leading)


def _coerce_uni(value) -> Optional[UniPoly]:
    if isinstance(value, UniPoly):
        return value
    if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
        return UniPoly([value])
    return None


class BiPoly:
    """Polynomial in ``x`` and ``y`` stored as ``{j: c_j(x)}`` for ``sum c_j(x) y**j``."""

    __slots__ = ("rows",)

    def __init__(self, rows: Mapping[int, UniPoly] | Iterable[tuple[int, UniPoly]] = ()):
        items = rows.items() if isinstance(rows, Mapping) else rows
        clean: dict[int, UniPoly] = {}
        for j, row in items:
            if j < 0:
                raise ValueError("negative y exponent")
            row = _coerce_uni(row) if not isinstance(row, UniPoly) else row
            if row is None:
                raise TypeError("BiPoly rows must be UniPoly")
            acc = clean.get(j, UniPoly()) + row
            clean[j] = acc
        object.__setattr__(
            self, "rows", tuple(sorted((j, r) for j, r in clean.items() if not r.is_zero()))
        )

    def __setattr__(self, name, value):
        raise AttributeError("BiPoly is immutable")

    @classmethod
    def from_terms(cls, terms: Mapping[tuple[int, int], Scalar]) -> "BiPoly":
        """Build from ``{(i, j): c}`` meaning ``c * x**i * y**j``."""
        rows: dict[int, list] = {}
        for (i, j), c in terms.items():
            row = rows.setdefault(j, [])
            if len(row) <= i:
                row.extend([0] * (i + 1 - len(row)))
            row[i] += as_rational(c)
        return cls({j: UniPoly(r) for j, r in rows.items()})

    @classmethod
    def from_x(cls, f: UniPoly) -> "BiPoly":
        return cls({0: f})

    @classmethod
    def x(cls) -> "BiPoly":
        return cls({0: UniPoly.x()})

    @classmethod
    def y(cls, k: int = 1) -> "BiPoly":
        return cls({k: UniPoly([1])})

    @classmethod
    def constant(cls, c: Scalar) -> "BiPoly":
        return cls({0: UniPoly([c])})

    def row(self, j: int) -> UniPoly:
        for k, r in self.rows:
            if k == j:
                return r
        return UniPoly()

    @property
    def y_degree(self):
        return self.rows[-1][0] if self.rows else NEG_INF

    @property
    def x_degree(self):
        return max((r.degree for _, r in self.rows), default=NEG_INF)

    def is_zero(self) -> bool:
        return not self.rows

    def __bool__(self):
        return bool(self.rows)

    def __eq__(self, other):
        if isinstance(other, BiPoly):
            return self.rows == other.rows
        if isinstance(other, (int, Fraction, UniPoly)):
            return self == _coerce_bi(other)
        return NotImplemented

    def __hash__(self):
        return hash(("BiPoly", self.rows))

    def __repr__(self):
        return f"BiPoly({dict(self.rows)!r})"

    def __str__(self):
        terms = []
        for j, r in self.rows:
            for i, c in enumerate(r.coeffs):
                terms.append((i + j, j, c, _power("x", i) + _power("y", j)))
        terms.sort(key=lambda t: (t[0], t[1]))
        return _format_terms((c, mono) for _, _, c, mono in terms)

    def terms(self) -> dict[tuple[int, int], Fraction]:
        return {
            (i, j): c for j, r in self.rows for i, c in enumerate(r.coeffs) if c != 0
        }

    def __add__(self, other):
        other = _coerce_bi(other)
        if other is None:
            return NotImplemented
        return BiPoly(list(self.rows) + list(other.rows))

    __radd__ = __add__

    def __neg__(self):
        return BiPoly((j, -r) for j, r in self.rows)

    def __sub__(self, other):
        other = _coerce_bi(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce_bi(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = _coerce_bi(other)
        if other is None:
            return NotImplemented
        out = []
        for j, r in self.rows:
            for k, s in other.rows:
                out.append((j + k, r * s))
        return BiPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "BiPoly":
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = BiPoly.constant(1)
        for _ in range(n):
            result = result * self
        return result

    def scale(self, c: Scalar) -> "BiPoly":
        return BiPoly((j, r.scale(c)) for j, r in self.rows)

    def partial_x(self) -> "BiPoly":
        return BiPoly((j, r.derivative()) for j, r in self.rows)

    def partial_y(self) -> "BiPoly":
        return BiPoly((j - 1, r.scale(j)) for j, r in self.rows if j)

    def partial(self, var: str) -> "BiPoly":
        if var == "x":
            return self.partial_x()
        if var == "y":
            return self.partial_y()
        raise ValueError(f"unknown variable {var!r}")

    def eval_x(self, x0: Scalar) -> UniPoly:
        """Substitute ``x = x0``; the result is a polynomial in ``y``."""
        x0 = as_rational(x0)
        out = [Fraction(0)] * (self.rows[-1][0] + 1 if self.rows else 0)
        for j, r in self.rows:
            out[j] = r(x0)
        return UniPoly(out)

    def content(self) -> Fraction:
        """Positive rational ``c`` such that ``self / c`` has coprime integer coefficients."""
        from math import gcd, lcm

        coeffs = [c for _, r in self.rows for c in r.coeffs if c != 0]
        if not coeffs:
            return Fraction(0)
        num = 0
        den = 1
        for c in coeffs:
            num = gcd(num, c.numerator)
            den = lcm(den, c.denominator)
        return Fraction(num, den)

    def divide_y(self, other: "BiPoly") -> Optional["BiPoly"]:
        """Exact quotient viewing both as polynomials in ``y`` over ``Q(x)``.

        Returns ``None`` unless the remainder vanishes and every quotient
        coefficient is a polynomial in ``x``.  The quotient over ``Q(x)`` is
        unique, so one failed polynomial step already rules it out.
        """
        if other.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        rem = dict(self.rows)
        dg, lc = other.rows[-1]
        quot: dict[int, UniPoly] = {}
        while rem:
            top = max(rem)
            if top < dg:
                return None
            c = rem[top].exact_div(lc)
            if c is None:
                return None
            quot[top - dg] = c
            for k, s in other.rows:
                idx = top - dg + k
                new = rem.get(idx, UniPoly()) - c * s
                if new.is_zero():
                    rem.pop(idx, None)
                else:
                    rem[idx] = new
        return BiPoly(quot)


def _coerce_bi(value) -> Optional[BiPoly]:
    if isinstance(value, BiPoly):
        return value
    if isinstance(value, UniPoly):
        return BiPoly.from_x(value)
    if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
        return BiPoly.constant(value)
    return None


def _power(var: str, k: int) -> str:
    if k == 0:
        return ""
    if k == 1:
        return var
    return f"{var}^{k}"


def _format_terms(terms) -> str:
    parts = []
    for c, mono in terms:
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if mono and mag == 1:
            body = mono
        elif mono:
            body = format_rational(mag) + ("*" if mag.denominator != 1 else "") + mono
        else:
            body = format_rational(mag)
        parts.append((sign, body))
    if not parts:
        return "0"
    parts.reverse()
    out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out
