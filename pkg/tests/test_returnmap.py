import random
from fractions import Fraction as F

import pytest

from abelcenter.abelmodel import AbelEquation, from_composition
from abelcenter.itint import iterated_integral
from abelcenter.polycore import UniPoly
from abelcenter.returnmap import (
    CenterReport,
    brudnyi_coefficient,
    center_check,
    return_map_coefficient,
    return_map_coefficients,
    universal_center_check,
)

from conftest import random_equation

ONE, ZERO = UniPoly([1]), UniPoly()


@pytest.mark.parametrize(
    "t, c", [((1,), 1), ((2,), 1), ((1, 1), 2), ((1, 1, 1), 6), ((2, 2), 3), ((1, 2), 3), ((2, 1), 2)]
)
def test_brudnyi_coefficient(t, c):
    assert brudnyi_coefficient(t) == c


def test_y_squared_field():
    # y' = y^2: P(y0) = y0 / (1 - y0), so every c_n is 1
    eq = AbelEquation(ONE, ZERO, 0, 1)
    assert return_map_coefficients(eq, 6) == [1] * 6


def test_y_cubed_field():
    # y' = y^3: P(y0) = y0 (1 - 2 y0^2)^(-1/2)
    eq = AbelEquation(ZERO, ONE, 0, 1)
    assert return_map_coefficients(eq, 6) == [0, 1, 0, F(3, 2), 0, F(5, 2)]


def test_unit_field_c3():
    eq = AbelEquation(ONE, ONE, 0, 1)
    assert return_map_coefficient(eq, 3) == F(7, 2)


def test_counterexample_is_center(paper_eq):
    assert return_map_coefficients(paper_eq, 8) == [0] * 8
    rep = center_check(paper_eq, 8)
    assert rep.all_zero and rep.first_failure is None


def test_center_check_failure():
    rep = center_check(AbelEquation(ONE, ZERO, 0, 1), 3)
    assert not rep.all_zero and rep.first_failure == (1, 1)
    assert center_check(AbelEquation(ZERO, ZERO, 0, 1), 5).all_zero
    with pytest.raises(ValueError):
        CenterReport(3, True, (1, F(1)))


def test_universal_check_counterexample(paper_eq):
    rep = universal_center_check(paper_eq, 5)
    assert not rep.universal
    # shortest order-5 words come first, so (1,2,2) is the first nonzero one
    assert rep.witness == ((1, 2, 2), F(131072, 2078505))
    assert universal_center_check(paper_eq, 4).universal


def test_universal_check_composition():
    eq, _ = from_composition(UniPoly([-1, 0, 1]), UniPoly([0, 0, 1]), UniPoly([0, 0, 0, 1]), -1, 1)
    assert universal_center_check(eq, 6).universal
    assert universal_center_check(AbelEquation(ZERO, ZERO, 0, 1), 4).universal


def test_low_order_closed_forms():
    rng = random.Random(5)
    for _ in range(40):
        eq = random_equation(rng)
        P, Q = eq.tilde("p")(eq.b), eq.tilde("q")(eq.b)
        c1, c2 = return_map_coefficients(eq, 2)
        assert c1 == P
        assert c2 == Q + P * P


def test_universal_implies_center():
    rng = random.Random(9)
    for _ in range(10):
        # even w is periodic on [-1, 1]
        w = UniPoly([rng.randint(-3, 3), 0, rng.randint(1, 3), 0, rng.randint(-2, 2)])
        p1 = UniPoly([rng.randint(-3, 3) for _ in range(3)])
        q1 = UniPoly([rng.randint(-3, 3) for _ in range(3)])
        eq, _ = from_composition(w, p1, q1, -1, 1)
        assert universal_center_check(eq, 5).universal
        assert center_check(eq, 5).all_zero


def test_scaling_covariance():
    rng = random.Random(21)
    for _ in range(10):
        eq = random_equation(rng, max_degree=3)
        eq2 = eq.scaled(2)
        for t in [(1,), (2,), (1, 2), (2, 1, 1), (2, 2)]:
            assert iterated_integral(eq2, t) == 2 ** sum(t) * iterated_integral(eq, t)
        for n, (c, c2) in enumerate(zip(return_map_coefficients(eq, 5), return_map_coefficients(eq2, 5)), 1):
            assert c2 == 2**n * c
