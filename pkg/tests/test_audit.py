import json
from concurrent.futures import ProcessPoolExecutor
from decimal import Decimal
from fractions import Fraction

import pytest

from conftest import PHI, SQRT5, dec
from markoff_fib.audit import a2a2_k, audit_names, audit_proof_bounds, value_at
from markoff_fib.fib import fib

K = 3 / SQRT5


def Fd(n):
    return Decimal(fib(n))


def second_triple(c, e1, e2):
    r1 = Fd(c - 1) / Fd(c)
    return r1 * r1 - K * (PHI ** (c - e1) + PHI ** (c - e2) + 2) / (PHI ** c - 1) * r1


def shift1_a5(c):
    # m(5, c-6, c)/F(c)^2 minus the bound for the second triple
    first = (25 + Fd(c - 6) ** 2 + Fd(c) ** 2 - 15 * Fd(c - 6) * Fd(c)) / Fd(c) ** 2
    return first - second_triple(c, 3, 9)


def final_a4_aprime_ge_7(c):
    h = (c - 3) // 2
    first = (9 + Fd(c - 5) ** 2 + Fd(c) ** 2 - 9 * Fd(c - 5) * Fd(c)) / Fd(c) ** 2
    r1 = Fd(c - 1) / Fd(c)
    cross = K * (PHI ** (c - 3) - PHI ** h - PHI ** (c - 10) + 1) / (PHI ** c + 1) * r1
    return first - (r1 * r1 + (Fd(h) / Fd(c)) ** 2 + (Fd(c - 10) / Fd(c)) ** 2 - cross)


def final_a2_lower(c):
    x, y, z = 1, Fd(c - 3), Fd(c)
    return 5 * (x + y * y + z * z - 3 * y * z) / PHI ** (2 * c)


@pytest.fixture(scope="module")
def report():
    return audit_proof_bounds(200)


@pytest.mark.parametrize("c", [12, 13, 19, 40, 120])
def test_shift1_a5_matches_decimal(c):
    assert abs(dec(value_at("shift1.a5", c)) - shift1_a5(c)) < Decimal("1e-50")


@pytest.mark.parametrize("c", [20, 21, 22, 35, 150])
def test_final_a4_aprime_ge_7_matches_decimal(c):
    assert abs(dec(value_at("final.a4.aprime_ge_7", c)) - final_a4_aprime_ge_7(c)) < Decimal("1e-50")


@pytest.mark.parametrize("c", [11, 12, 60])
def test_final_a2_lower_matches_decimal(c):
    assert abs(dec(value_at("final.a2.lower", c)) - final_a2_lower(c)) < Decimal("1e-50")


def test_shift1_a5_constant_fails_only_at_12():
    # the decimal oracle shows a positive value at c = 12 and -0.004 or less after
    assert shift1_a5(12) > 0
    assert all(shift1_a5(c) <= Decimal("-0.004") for c in range(13, 201))


def test_final_a4_aprime_ge_7_is_positive_but_below_0_01():
    vals = {c: final_a4_aprime_ge_7(c) for c in range(20, 201)}
    worst = min(vals, key=vals.get)
    assert worst == 21
    assert Decimal("0.00101") < vals[21] < Decimal("0.00102")
    assert all(v > 0 for v in vals.values())


def test_a2a2_window_from_integers():
    # exact rational oracle built directly from Fibonacci integers
    for c in range(11, 201):
        l = Fraction(fib(c - 9), fib(c - 1))
        r = Fraction(fib(c - 8), fib(c - 1))
        assert l * l - 3 * l >= Fraction("-0.0671")
        assert r * r - 3 * r <= Fraction("-0.0998")
        mid = -Fraction(fib(c - 4) * fib(c - 3), fib(c - 1) ** 2)
        d = Fraction(3, fib(c - 1) ** 2)
        assert Fraction("-0.0913") <= mid - d and mid + d <= Fraction("-0.0891")


def test_a2a2_k_is_the_forced_constant():
    for c in range(11, 80):
        m1 = 1 + fib(c - 3) ** 2 + fib(c) ** 2 - 3 * fib(c - 3) * fib(c)
        assert a2a2_k(c) == m1 - 1 - fib(c - 1) ** 2


def test_verdicts(report):
    assert not report.passed
    assert report.sound
    assert sorted(c.name for c in report.failures()) == ["final.a4.aprime_ge_7", "shift1.a5"]
    assert report["shift1.a5"].worst_at == 12
    assert report["final.a4.aprime_ge_7"].worst_at == 21
    assert report["shift1.a5.sign"].passed
    assert report["final.a4.aprime_ge_7.sign"].passed
    assert report["final.a4.aprime_ge_7.actual"].passed


@pytest.mark.parametrize("name, c0, worst_at, approx", [
    ("shift1.a_ge_6", 19, 19, -0.000235625),
    ("shift1.a3", 9, 9, -0.0073857),
    ("shift1.a4", 9, 9, -0.00860187),
    ("shift1.a2", 13, 13, -0.000974935),
    ("shift1.aprime2", 11, 11, -0.0150234),
    ("a2a2.left", 11, 12, -0.0669107),
    ("a2a2.right", 11, 12, -0.0999874),
    ("final.a2.lower", 11, 12, 0.347456),
    ("final.a2.upper", 11, 12, 0.34384),
    ("final.a2.upper_bound", 11, 11, 0.345928),
    ("final.a4.aprime6", 13, 13, 0.0048076),
    ("final.a4.aprime2", 9, 9, -0.00519031),
])
def test_named_checks_pass_with_frozen_extremes(report, name, c0, worst_at, approx):
    check = report[name]
    assert check.passed
    assert check.points == 200 - c0 + 1
    assert check.worst_at == worst_at
    assert float(check.worst) == pytest.approx(approx, rel=1e-5)


def test_literal_typo_variants_are_informational(report):
    for name in ("final.a2.upper_bound.variant_phi6", "final.a4.aprime2.variant_fc4",
                 "final.a2.upper_bound.printed_max"):
        assert not report[name].passed
        assert not report[name].gating and not report[name].needed


def test_printed_max_value(report):
    assert float(report["final.a2.upper_bound.printed_max"].worst) == pytest.approx(0.372191, rel=1e-6)


def test_constant_checks(report):
    for name in ("karamata.L419", "karamata.L227", "karamata.L319", "karamata.U218",
                 "karamata.0.14_gt_0.139", "final.a2.lower_limit", "gap2.sqrt2_constant",
                 "samec.sum_up", "samec.sum_down", "samec.0.83_lt_8/9", "positivity.quotient_sum"):
        assert report[name].passed, name
    assert report["gap2.sqrt2_constant"].worst == 2 * 44 ** 2 - 48 ** 2


def test_names_and_only_filter():
    names = audit_names()
    assert len(names) == len(set(names))
    sub = audit_proof_bounds(40, only=["shift1.a5", "a2a2.left"])
    assert sub.names() == ["shift1.a5", "a2a2.left"]


def test_parallel_map_is_identical(report):
    with ProcessPoolExecutor(max_workers=2) as pool:
        par = audit_proof_bounds(200, map_fn=pool.map)
    assert json.dumps(par.to_json()) == json.dumps(report.to_json())


def test_serializations(report):
    doc = json.loads(json.dumps(report.to_json()))
    assert doc["passed"] is False and doc["sound"] is True
    assert report.to_csv().splitlines()[0].startswith("name,claim,domain")
    text = report.to_text()
    assert text.endswith("every inequality the argument needs holds\n")
    assert "2 stated bound(s) FAILED" in text


def test_rejects_small_c_max():
    with pytest.raises(ValueError):
        audit_proof_bounds(19)
