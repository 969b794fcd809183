"""Floating-point Poincare map of an Abel equation.

This is a cross-check for the exact path, not a replacement for it.  The
integrator is the Dormand-Prince 5(4) embedded pair with local
extrapolation and absolute local error control.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional, Sequence

import numpy as np

from .abelmodel import AbelEquation

ESCAPE_BOUND = 1e6
DEFAULT_GRID = (-0.1, -0.05, -0.02, 0.02, 0.05, 0.1)
DEFAULT_LADDER = tuple(s * 0.1 * 2.0**-k for k in range(7) for s in (1, -1))


class BlowUpError(ArithmeticError):
    pass


class StepUnderflowError(ArithmeticError):
    pass


class IllConditionedFitError(ArithmeticError):
    pass


@dataclass(frozen=True)
class FlowResult:
    y_end: float
    steps: int
    est_error: float


# Dormand & Prince (1980), RK5(4)7M
_C = (0.0, 1 / 5, 3 / 10, 4 / 5, 8 / 9, 1.0, 1.0)
_A = (
    (),
    (1 / 5,),
    (3 / 40, 9 / 40),
    (44 / 45, -56 / 15, 32 / 9),
    (19372 / 6561, -25360 / 2187, 64448 / 6561, -212 / 729),
    (9017 / 3168, -355 / 33, 46732 / 5247, 49 / 176, -5103 / 18656),
    (35 / 384, 0.0, 500 / 1113, 125 / 192, -2187 / 6784, 11 / 84),
)
_B5 = (35 / 384, 0.0, 500 / 1113, 125 / 192, -2187 / 6784, 11 / 84, 0.0)
_B4 = (5179 / 57600, 0.0, 7571 / 16695, 393 / 640, -92097 / 339200, 187 / 2100, 1 / 40)
_E = tuple(b5 - b4 for b5, b4 in zip(_B5, _B4))


def dopri54(
    f: Callable[[float, float], float],
    x0: float,
    x1: float,
    y0: float,
    tol: float,
    escape: float = ESCAPE_BOUND,
    max_steps: int = 1_000_000,
) -> FlowResult:
    """Integrate the scalar ODE ``y' = f(x, y)`` from ``x0`` to ``x1``."""
    if tol <= 0:
        raise ValueError("tol must be positive")
    span = x1 - x0
    x, y = x0, y0
    h = span * 1e-3
    hmin = abs(span) * 1e-15
    steps = 0
    est = 0.0
    k1 = f(x, y)
    while x < x1:
        if steps >= max_steps:
            raise StepUnderflowError(f"step budget exhausted at x = {x!r}")
        h = min(h, x1 - x)
        k = [k1]
        for i in range(1, 7):
            yi = y + h * sum(a * kj for a, kj in zip(_A[i], k))
            k.append(f(x + _C[i] * h, yi))
        y_new = y + h * sum(b * kj for b, kj in zip(_B5, k))
        err = abs(h * sum(e * kj for e, kj in zip(_E, k)))
        if not math.isfinite(y_new) or not math.isfinite(err):
            err = math.inf
        if err <= tol:
            x, y = x + h, y_new
            est += err
            steps += 1
            k1 = k[6]  # first-same-as-last
            if abs(y) > escape:
                raise BlowUpError(f"blow-up before b (|y| > {escape:g} at x = {x:.6g})")
        factor = 5.0 if err == 0 else min(5.0, max(0.2, 0.9 * (tol / err) ** 0.2))
        h *= factor
        if h < hmin and x < x1:
            raise StepUnderflowError(f"step size underflow at x = {x!r}")
    return FlowResult(y, steps, est)


def _rhs(eq: AbelEquation) -> Callable[[float, float], float]:
    p, q = eq.p, eq.q

    def f(x: float, y: float) -> float:
        y2 = y * y
        return p(x) * y2 + q(x) * y2 * y

    return f


def integrate_flow(eq: AbelEquation, y0: float, tol: float = 1e-12) -> FlowResult:
    """``y(b)`` for the solution with ``y(a) = y0``."""
    if abs(y0) >= ESCAPE_BOUND:
        raise ValueError("y0 beyond the escape bound")
    if y0 == 0:
        return FlowResult(0.0, 0, 0.0)
    return dopri54(_rhs(eq), float(eq.a), float(eq.b), float(y0), tol)


def poincare_residuals(
    eq: AbelEquation, grid: Sequence[float] = DEFAULT_GRID, tol: float = 1e-12
) -> float:
    """``max |P(y0) - y0|`` over the grid."""
    return max(abs(integrate_flow(eq, y0, tol).y_end - y0) for y0 in grid)


def displacement_quotient(eq: AbelEquation, y0: float, tol: float = 1e-12) -> float:
    """``(P(y0) - y0) / y0^2`` without the cancellation of subtracting ``y0``.

    Substituting ``y = y0 + y0^2 u`` gives
    ``u' = p (1 + y0 u)^2 + y0 q (1 + y0 u)^3`` with ``u(a) = 0``, and the
    quotient is ``u(b)``.
    """
    if y0 == 0:
        raise ValueError("y0 must be nonzero")
    p, q = eq.p, eq.q

    def f(x: float, u: float) -> float:
        s = 1.0 + y0 * u
        return s * s * (p(x) + y0 * q(x) * s)

    escape = ESCAPE_BOUND / (y0 * y0)
    return dopri54(f, float(eq.a), float(eq.b), 0.0, tol, escape=escape).y_end


def fit_coefficients(
    eq: AbelEquation,
    N: int,
    tol: float = 1e-13,
    ladder: Sequence[float] = DEFAULT_LADDER,
    extra_terms: Optional[int] = None,
) -> list[float]:
    """Least-squares estimates of ``c_1 .. c_N`` from sampled return maps.

    The quotient ``(P(y0) - y0) / y0^2 = c_1 + c_2 y0 + ...`` is fitted with
    ``N + extra_terms`` monomials so that the truncated tail does not leak
    into the reported low-order coefficients.
    """
    if not 1 <= N <= 4:
        raise ValueError("N must be between 1 and 4")
    ladder = np.asarray(ladder, dtype=float)
    if extra_terms is None:
        extra_terms = len(ladder) - 3 - N
    m = N + max(extra_terms, 0)
    if m > len(ladder):
        raise ValueError("more fit terms than ladder samples")
    g = np.array([displacement_quotient(eq, y0, tol) for y0 in ladder])
    # column scaling keeps the Vandermonde matrix well balanced
    scale = float(np.max(np.abs(ladder)))
    V = np.vander(ladder / scale, m, increasing=True)
    cond = np.linalg.cond(V)
    if not np.isfinite(cond) or cond > 1e12:
        raise IllConditionedFitError(f"fit matrix condition number {cond:.3g} exceeds 1e12")
    sol, *_ = np.linalg.lstsq(V, g, rcond=None)
    return [float(sol[n] / scale**n) for n in range(N)]
