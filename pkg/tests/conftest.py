import pytest
from hypothesis import strategies as st

from abelcenter.polycore import UniPoly
from abelcenter.abelmodel import AbelEquation

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


small_rationals = st.fractions(min_value=-5, max_value=5, max_denominator=6)


def unipolys(max_degree=4):
    return st.lists(small_rationals, max_size=max_degree + 1).map(UniPoly)


def random_equation(rng, max_degree=4):
    """Random equation with integer-ish coefficients and rational endpoints."""
    from fractions import Fraction

    def poly():
        deg = rng.randint(0, max_degree)
        return UniPoly(Fraction(rng.randint(-6, 6), rng.randint(1, 3)) for _ in range(deg + 1))

    a = Fraction(rng.randint(-4, 3), rng.randint(1, 4))
    b = a + Fraction(rng.randint(1, 6), rng.randint(1, 4))
    return AbelEquation(poly(), poly(), a, b)


@pytest.fixture
def paper_eq():
    from abelcenter.abelmodel import paper_counterexample

    return paper_counterexample()
