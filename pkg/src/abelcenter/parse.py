"""Text forms for rationals and polynomials.

Grammar: terms ``[coef][*][x[^k]]`` (and ``y[^k]`` for curves) joined by
``+``/``-``.  Coefficients are integers or ``num/den``; whitespace is
ignored.  A univariate polynomial may also be written as a bracketed
ascending coefficient list, e.g. ``[2, 0, -30, 0, 40]``.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .polycore import BiPoly, UniPoly


class ParseError(ValueError):
    def __init__(self, message: str, text: str, column: int):
        super().__init__(f"{message} at column {column + 1}: {text!r}")
        self.column = column


_RATIONAL = re.compile(r"\s*([+-]?)\s*(\d+)(?:\s*/\s*(\d+))?\s*$")


def parse_rational(text: str) -> Fraction:
    m = _RATIONAL.match(text)
    if not m:
        raise ParseError("expected an integer or num/den", text, 0)
    sign, num, den = m.groups()
    if den is not None and int(den) == 0:
        raise ParseError("zero denominator", text, text.index("/"))
    value = Fraction(int(num), int(den) if den else 1)
    return -value if sign == "-" else value


def parse_poly(text: str) -> UniPoly:
    """Parse a polynomial in ``x``."""
    stripped = text.strip()
    if stripped.startswith("["):
        return _parse_coeff_list(text)
    terms = _parse_terms(text, allowed="x")
    out: dict[int, Fraction] = {}
    for (i, _), c in terms:
        out[i] = out.get(i, Fraction(0)) + c
    if not out:
        return UniPoly()
    return UniPoly(out.get(i, 0) for i in range(max(out) + 1))


def parse_bipoly(text: str) -> BiPoly:
    """Parse a polynomial in ``x`` and ``y``."""
    out: dict[tuple[int, int], Fraction] = {}
    for key, c in _parse_terms(text, allowed="xy"):
        out[key] = out.get(key, Fraction(0)) + c
    return BiPoly.from_terms(out)


def parse_indices(text: str) -> tuple[int, ...]:
    parts = [s.strip() for s in text.split(",")]
    if not parts or any(s not in ("1", "2") for s in parts):
        raise ParseError("indices must be a comma-separated list of 1s and 2s", text, 0)
    return tuple(int(s) for s in parts)


def _parse_coeff_list(text: str) -> UniPoly:
    body = text.strip()
    if not body.endswith("]"):
        raise ParseError("unterminated coefficient list", text, len(text))
    inner = body[1:-1].strip()
    if not inner:
        return UniPoly()
    coeffs = []
    offset = text.index("[") + 1
    for item in inner.split(","):
        try:
            coeffs.append(parse_rational(item))
        except ParseError:
            raise ParseError("non-rational coefficient", text, offset) from None
        offset += len(item) + 1
    return UniPoly(coeffs)


def _parse_terms(text: str, allowed: str):
    pos = 0
    n = len(text)

    def skip_ws():
        nonlocal pos
        while pos < n and text[pos].isspace():
            pos += 1

    def read_int() -> int:
        nonlocal pos
        start = pos
        while pos < n and text[pos].isdigit():
            pos += 1
        if start == pos:
            raise ParseError("expected digits", text, pos)
        return int(text[start:pos])

    terms = []
    skip_ws()
    if pos == n:
        raise ParseError("empty polynomial", text, 0)
    first = True
    while True:
        skip_ws()
        if pos == n:
            if first:
                raise ParseError("empty polynomial", text, pos)
            break
        sign = 1
        if text[pos] in "+-":
            sign = -1 if text[pos] == "-" else 1
            pos += 1
            skip_ws()
        elif not first:
            raise ParseError("expected '+' or '-'", text, pos)
        first = False
        term_start = pos
        coeff = Fraction(1)
        have_coeff = False
        if pos < n and text[pos].isdigit():
            num = read_int()
            if pos < n and text[pos] == ".":
                raise ParseError("non-integer/non-rational coefficient", text, pos)
            skip_ws()
            den = 1
            if pos < n and text[pos] == "/":
                pos += 1
                skip_ws()
                den = read_int()
                if den == 0:
                    raise ParseError("zero denominator", text, pos - 1)
                if pos < n and text[pos] == ".":
                    raise ParseError("non-integer/non-rational coefficient", text, pos)
            coeff = Fraction(num, den)
            have_coeff = True
        exps = {v: 0 for v in allowed}
        have_var = False
        while True:
            skip_ws()
            if pos < n and text[pos] == "*":
                if not (have_coeff or have_var):
                    raise ParseError("unexpected '*'", text, pos)
                pos += 1
                skip_ws()
                if pos == n or text[pos] not in allowed:
                    raise ParseError("expected variable after '*'", text, pos)
            if pos < n and text[pos].isalpha():
                var = text[pos]
                if var not in allowed:
                    raise ParseError(f"unknown variable {var!r}", text, pos)
                pos += 1
                skip_ws()
                k = 1
                if pos < n and text[pos] == "^":
                    pos += 1
                    skip_ws()
                    k = read_int()
                exps[var] += k
                have_var = True
                continue
            break
        if not (have_coeff or have_var):
            raise ParseError("expected a term", text, term_start)
        key = (exps.get("x", 0), exps.get("y", 0))
        terms.append((key, sign * coeff))
    return terms
