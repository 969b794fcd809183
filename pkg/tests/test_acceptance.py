"""Acceptance criteria, one test per criterion.

Each test records a PASS/FAIL line (shown in the pytest terminal summary)
before asserting.  Run directly with ``python tests/test_acceptance.py``.
"""

import io
import json
import random
import time
from fractions import Fraction as F

import mpmath
import pytest

from abelcenter.abelmodel import AbelEquation, from_composition, paper_counterexample, paper_curves
from abelcenter.cli import run
from abelcenter.compcond import decompose_as, moment, right_factor_candidate
from abelcenter.darboux import DarbouxCandidate, cofactor, endpoint_profile
from abelcenter.itint import iterated_integral
from abelcenter.numflow import fit_coefficients
from abelcenter.parse import parse_rational
from abelcenter.polycore import BiPoly, UniPoly
from abelcenter.returnmap import return_map_coefficients

from conftest import ACCEPTANCE_LINES, random_equation
from test_compcond import _brute_force_decomposable, _random_inputs

TARGET_I122 = F(-131072, 6235515)


def cli(*argv):
    out, err = io.StringIO(), io.StringIO()
    t0 = time.perf_counter()
    code = run([*argv, "--json"], out=out, err=err)
    elapsed = time.perf_counter() - t0
    data = json.loads(out.getvalue()) if out.getvalue() else {}
    return code, data, elapsed


def record(n, checks):
    failed = [name for name, ok in checks if not ok]
    status = "PASS" if not failed else "FAIL"
    detail = "all checks hold" if not failed else "failed: " + "; ".join(failed)
    line = f"[{status}] criterion {n}: {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert not failed, line


def test_criterion_1_exact_iterated_integral():
    code, data, dt = cli("iterated", "--paper", "--indices", "1,2,2")
    value = parse_rational(data["value"])
    record(1, [
        (f"exit code {code} == 0", code == 0),
        (f"I_(1,2,2) = {data['value']} == {TARGET_I122}", value == TARGET_I122),
        (f"runtime {dt:.3f}s < 1s", dt < 1.0),
    ])


def test_criterion_2_center_to_order_8():
    code, data, dt = cli("center-check", "--paper", "--order", "8")
    record(2, [
        (f"exit code {code} == 0", code == 0),
        ("c_1..c_8 all exactly 0", data["all_zero"] and data["coefficients"] == ["0"] * 8),
        (f"runtime {dt:.3f}s < 30s", dt < 30.0),
    ])


def test_criterion_3_not_universal():
    code, data, _ = cli("universal-check", "--paper", "--order", "5")
    witness = data["witness"] or {}
    record(3, [
        ("universal = false", data["universal"] is False and code == 1),
        (f"witness tuple {witness.get('tuple')} == [1, 2, 2]", witness.get("tuple") == [1, 2, 2]),
        (f"witness value {witness.get('value')} == {TARGET_I122}",
         witness.get("value") is not None and parse_rational(witness["value"]) == TARGET_I122),
    ])


def test_criterion_4_composition_fails_and_moment_nonzero():
    code, data, _ = cli("composition", "--paper")
    mcode, mdata, _ = cli("moment", "--paper", "--i", "1", "--j", "2", "--weight", "p")
    value = parse_rational(mdata["value"])

    eq = paper_counterexample()
    mpmath.mp.dps = 40
    P, Q = eq.tilde("p"), eq.tilde("q")

    def mp(f):
        cs = [mpmath.mpf(c.numerator) / c.denominator for c in f.coeffs][::-1]
        return lambda x: mpmath.polyval(cs, x)

    Pm, Qm, pm = mp(P), mp(Q), mp(eq.p)
    quad = mpmath.quad(lambda x: Pm(x) * Qm(x) ** 2 * pm(x), [-1, -0.5, 0, 0.5, 1])
    exact = mpmath.mpf(value.numerator) / value.denominator
    rel = abs(quad - exact) / abs(exact) if value != 0 else mpmath.inf
    record(4, [
        (f"composition exit {code} == 1", code == 1),
        (f"reason {data['reason']} == partner-not-composed", data["reason"] == "partner-not-composed"),
        (f"moment(1,2,p) = {mdata['value']} is nonzero", value != 0),
        (f"quadrature {mpmath.nstr(quad, 15)} matches to 12 digits", rel < 1e-12),
    ])


def test_criterion_5_darboux_suite():
    eq = paper_counterexample()
    curves = paper_curves()
    Ks = {name: cofactor(eq, f) for name, f in curves.items()}
    identity_ok = False
    if Ks["f1"] is not None and Ks["f2"] is not None:
        Ky = BiPoly({1: eq.p, 2: eq.q})
        identity_ok = (Ky.scale(2) + Ks["f1"].scale(3) - Ks["f2"].scale(4)).is_zero()
    code, data, _ = cli("first-integral", "--paper", "--m0", "2", "--curves", "f1:3,f2:-4")
    H = DarbouxCandidate(2, ((curves["f1"], 3), (curves["f2"], -4)))
    y2, one = UniPoly([0, 0, 1]), UniPoly([1])
    prof = data.get("endpoint_profiles", {})
    record(5, [
        ("cofactors exist for f1, f2, f3", all(K is not None for K in Ks.values())),
        ("2(py + qy^2) + 3K1 - 4K2 = 0", identity_ok),
        (f"first-integral exit {code} == 0", code == 0 and data["first_integral"] is True),
        ("profile at x = 1 is (y^2, 1)", endpoint_profile(H, 1) == (y2, one)),
        ("profile at x = -1 is (y^2, 1)", endpoint_profile(H, -1) == (y2, one)),
        ("cli profiles are (y^2, 1)",
         all(prof.get(k, {}).get("numerator") == "y^2" and prof[k]["denominator"] == "1" for k in "ab")),
    ])


def test_criterion_6_oracle_battery():
    one, zero = UniPoly([1]), UniPoly()
    sq = return_map_coefficients(AbelEquation(one, zero, 0, 1), 6)
    cu = return_map_coefficients(AbelEquation(zero, one, 0, 1), 6)
    unit = AbelEquation(one, one, 0, 1)
    c3 = return_map_coefficients(unit, 3)[2]
    fit3 = fit_coefficients(unit, 3)[2]
    record(6, [
        ("p=1,q=0: c_1..c_6 = 1", sq == [1] * 6),
        ("p=0,q=1: c_2 = 1, c_4 = 3/2, c_6 = 5/2",
         (cu[1], cu[3], cu[5]) == (1, F(3, 2), F(5, 2))),
        ("p=0,q=1: odd c_n = 0", cu[0] == cu[2] == cu[4] == 0),
        ("p=q=1: c_3 = 7/2 exactly", c3 == F(7, 2)),
        (f"p=q=1: numeric fit {fit3:.10f} within 1e-6 of 7/2", abs(fit3 - 3.5) < 1e-6),
    ])


def test_criterion_7_composition_round_trip():
    w, p1, q1 = UniPoly([-1, 0, 1]), UniPoly([0, 0, 1]), UniPoly([0, 0, 0, 1])
    eq, _ = from_composition(w, p1, q1, -1, 1)
    flags = ["--p", str(eq.p), "--q", str(eq.q), "--a", "-1", "--b", "1"]
    code, data, _ = cli("composition", *flags)
    ucode, udata, _ = cli("universal-check", *flags, "--order", "6")
    moments_zero = all(
        moment(eq, i, j, wt) == 0 for i in range(6) for j in range(6 - i) for wt in "pq"
    )
    from abelcenter.itint import all_index_tuples_up_to

    all_32 = all_index_tuples_up_to(6)
    record(7, [
        (f"composition exit {code} == 0", code == 0 and data["holds"]),
        (f"normalized w = {data.get('witness', {}).get('w')} == x^2",
         (data.get("witness") or {}).get("w") == "x^2"),
        (f"universal-check exit {ucode} == 0", ucode == 0 and udata["universal"]),
        ("32 iterated integrals exactly 0",
         len(all_32) == 32 and all(iterated_integral(eq, t) == 0 for t in all_32)),
        ("moments with i+j <= 5 vanish", moments_zero),
    ])


def test_criterion_8_property_suites():
    rng = random.Random(2024)
    eqs = [random_equation(rng) for _ in range(100)]
    shuffle_11 = shuffle_12 = True
    c2_ok = True
    for eq in eqs:
        I = {}

        def get(t):
            if t not in I:
                I[t] = iterated_integral(eq, t)
            return I[t]

        for i in (1, 2):
            for j in (1, 2):
                shuffle_11 &= get((i,)) * get((j,)) == get((i, j)) + get((j, i))
                for k in (1, 2):
                    shuffle_12 &= get((i,)) * get((j, k)) == get((i, j, k)) + get((j, i, k)) + get((j, k, i))
        P, Q = eq.tilde("p")(eq.b), eq.tilde("q")(eq.b)
        c2_ok &= return_map_coefficients(eq, 2)[1] == Q + P * P

    agree = True
    for degree in (4, 6):
        for f in _random_inputs(random.Random(100 + degree), degree, 12):
            for d in (2, 3):
                if degree % d or d == degree:
                    continue
                h = right_factor_candidate(f, d)
                ours = h is not None and decompose_as(f, h) is not None
                agree &= ours == _brute_force_decomposable(f, d)
    record(8, [
        ("shuffle 1x1 on 100 random equations", shuffle_11),
        ("shuffle 1x2 on 100 random equations", shuffle_12),
        ("decomposition agrees with brute force (deg 4, 6)", agree),
        ("c_2 = q~(b) + p~(b)^2 on 100 random equations", c2_ok),
    ])


def test_criterion_9_numeric_center():
    code, data, dt = cli("numeric-poincare", "--paper", "--grid", "-0.1,-0.05,-0.02,0.02,0.05,0.1",
                         "--tol", "1e-12")
    record(9, [
        (f"exit code {code} == 0", code == 0),
        (f"max residual {data['max_residual']:.3e} < 1e-9", data["max_residual"] < 1e-9),
        (f"runtime {dt:.3f}s < 5s", dt < 5.0),
    ])


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q", "-s", "-p", "no:cacheprovider"]))
