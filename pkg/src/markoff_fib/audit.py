"""Exact audit of the numeric inequalities used to rule out two Fibonacci m-triples.

Every check evaluates a closed expression in Fibonacci quotients (exact
rationals) and powers of phi (elements of Q(sqrt5)) at each integer ``c`` of a
finite range and compares it with a decimal constant. Nothing here is
asymptotic: a passing check certifies the constant on ``[c0, c_max]`` only.

Naming of the check groups:

``growth``       ratio growth of consecutive Fibonacci numbers
``karamata``     the golden-ratio constants L and U at fixed parameters
``gap2``         ruling out c' <= c - 2 when the first triple has a = 2 or 3
``gap1``         ruling out c' < c - 1 and pinning a + b = c - 1
``shift1``       pinning a' + b' when c' = c - 1 (one check per case of a or a')
``a2a2``         the root-bracketing window when a = a' = 2 and c' = c - 1
``final``        the separations that exclude c' = c - 1 altogether
``samec``        constants for two triples sharing the same c
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable

from .fib import fib
from .karamata import THREE_OVER_SQRT5, karamata_L, karamata_U
from .markoff import m_tilde
from .qsqrt5 import QSqrt5
from .report import AuditCheck, AuditReport, Exact

phi_pow = QSqrt5.phi_pow
D = Fraction  # decimal constants are written as D("0.0002")

MIN_C_MAX = 20


def R(n: int, d: int) -> Fraction:
    """F(n)/F(d)."""
    return Fraction(fib(n), fib(d))


def inv_sq(c: int, k: int = 1) -> Fraction:
    """k/F(c)^2."""
    return Fraction(k, fib(c) ** 2)


def _binet_ratio(c: int, e1: int, e2: int) -> QSqrt5:
    # (3/sqrt5) (phi^(c-e1) + phi^(c-e2) + 2) / (phi^c - 1)
    return THREE_OVER_SQRT5 * (phi_pow(c - e1) + phi_pow(c - e2) + 2) / (phi_pow(c) - 1)


def _second_triple_cm1(c: int, e1: int, e2: int) -> QSqrt5:
    # F(c-1)^2/F(c)^2 - bound(3F(a')F(b')/F(c)) * F(c-1)/F(c)
    r = R(c - 1, c)
    return r * r - _binet_ratio(c, e1, e2) * r


def _first_a4(c: int) -> Fraction:
    # m(4, c-5, c)/F(c)^2
    r = R(c - 5, c)
    return 1 + r * r + inv_sq(c, 9) - 9 * r


# --- expressions, one function per bound ------------------------------


def shift1_a_ge_6(c: int) -> QSqrt5:
    h = (c - 1) // 2
    first = 1 + R(c - 7, c) ** 2 + R(h, c) ** 2
    cross = THREE_OVER_SQRT5 * (phi_pow(c - 1) - phi_pow(c - 13) - 1 + phi_pow(1 - c)) / (phi_pow(c) + 1)
    return first - cross - _second_triple_cm1(c, 3, 9)


def shift1_a5(c: int) -> QSqrt5:
    r = R(c - 6, c)
    return 1 + r * r + inv_sq(c, 25) - 15 * r - _second_triple_cm1(c, 3, 9)


def shift1_a3(c: int) -> QSqrt5:
    r = R(c - 4, c)
    return 1 + r * r + inv_sq(c, 4) - 6 * r - _second_triple_cm1(c, 3, 9)


def shift1_a4(c: int) -> QSqrt5:
    return _first_a4(c) - _second_triple_cm1(c, 4, 10)


def shift1_a2(c: int) -> QSqrt5:
    r = R(c - 3, c)
    return 1 + r * r + inv_sq(c) - 3 * r - _second_triple_cm1(c, 7, 13)


def shift1_aprime2(c: int) -> Fraction:
    r1 = R(c - 1, c)
    return _first_a4(c) - (r1 * r1 - 3 * R(c - 5, c) * r1)


def final_a4_aprime_ge_7(c: int) -> QSqrt5:
    h = (c - 3) // 2
    r1 = R(c - 1, c)
    cross = THREE_OVER_SQRT5 * (phi_pow(c - 3) - phi_pow(h) - phi_pow(c - 10) + 1) / (phi_pow(c) + 1) * r1
    return _first_a4(c) - (r1 * r1 + R(h, c) ** 2 + R(c - 10, c) ** 2 - cross)


def final_a4_aprime6(c: int) -> Fraction:
    r1 = R(c - 1, c)
    return _first_a4(c) - (r1 * r1 + inv_sq(c, 64) + R(c - 9, c) ** 2 - 24 * R(c - 9, c) * r1)


def final_a4_aprime2(c: int, b_offset: int = 5) -> Fraction:
    # second triple (2, c-5, c-1); b_offset=4 gives the F(c-4) variant
    r1, rb = R(c - 1, c), R(c - b_offset, c)
    return _first_a4(c) - (r1 * r1 + inv_sq(c) + rb * rb - 3 * rb * r1)


def final_a2_lower(c: int) -> QSqrt5:
    """5 m(2, c-3, c) / phi^(2c)."""
    return 5 * m_tilde(1, fib(c - 3), fib(c)) * phi_pow(-2 * c)


def final_a2_upper(c: int) -> QSqrt5:
    """max over t = 1..5 and a' of 5 m(a', c-1-t-a', c-1) / phi^(2c)."""
    scale = 5 * phi_pow(-2 * c)
    best = None
    for t in range(1, 6):
        for ap in range(2, (c - 1 - t) // 2 + 1):
            v = m_tilde(fib(ap), fib(c - 1 - t - ap), fib(c - 1))
            if best is None or v > best:
                best = v
    return best * scale


def final_a2_upper_bound(c: int) -> QSqrt5:
    """max over t = 1..5 of phi^-2 U(2, t, c-1)."""
    return max(phi_pow(-2) * karamata_U((2, t, c - 1)) for t in range(1, 6))


def final_a2_upper_bound_phi6(c: int) -> QSqrt5:
    def expr(t: int) -> QSqrt5:
        return (
            phi_pow(-2)
            - THREE_OVER_SQRT5 * phi_pow(-2 - t)
            + (1 + THREE_OVER_SQRT5 * phi_pow(t)) * (phi_pow(-2 * t - 6) + phi_pow(6 - 2 * c))
            + 9 * phi_pow(-2 * c)
        )

    return max(expr(t) for t in range(1, 6))


def gap2_b3(c: int) -> Fraction:
    r = R(c - 3, c)
    return 1 + inv_sq(c) + r * r - 3 * r - D(5, 16)


def gap2_b4(c: int) -> Fraction:
    r = R(c - 4, c)
    return 1 + inv_sq(c) + r * r - 3 * r - D(5, 16)


def gap2_a3_b5(c: int) -> Fraction:
    return 1 - 6 * R(c - 5, c) - D(5, 16)


def gap2_a3_b4(c: int) -> Fraction:
    r = R(c - 4, c)
    return 1 + inv_sq(c, 4) + r * r - 6 * r - (R(c - 3, c) ** 2 + 2 * R(c - 6, c) ** 2)


def gap1_top_ratio(c: int) -> QSqrt5:
    """5 m(2, 2, c) / phi^(2c)."""
    return 5 * m_tilde(1, 1, fib(c)) * phi_pow(-2 * c)


def _min_ratio(c: int, a_min: int, t: int) -> QSqrt5:
    best = min(m_tilde(fib(a), fib(c - t - a), fib(c)) for a in range(a_min, (c - t) // 2 + 1))
    return 5 * best * phi_pow(-2 * c)


def a2a2_left(c: int) -> Fraction:
    r = R(c - 9, c - 1)
    return r * r - 3 * r


def a2a2_right(c: int) -> Fraction:
    r = R(c - 8, c - 1)
    return r * r - 3 * r


def a2a2_middle(c: int, sign: int) -> Fraction:
    return -R(c - 4, c - 1) * R(c - 3, c - 1) + sign * inv_sq(c - 1, 3)


def a2a2_k(c: int) -> int:
    """k = F(b')^2 - 3F(b')F(c-1) forced by m(2, c-3, c) = m(2, b', c-1)."""
    return fib(c - 3) ** 2 + fib(c) ** 2 - fib(c - 1) ** 2 - 3 * fib(c - 3) * fib(c)


def a2a2_bracket(c: int) -> int:
    """min(p(F(c-9)) - k, k - p(F(c-8))) with p(x) = x^2 - 3F(c-1)x."""
    k = a2a2_k(c)

    def p(x: int) -> int:
        return x * x - 3 * fib(c - 1) * x

    return min(p(fib(c - 9)) - k, k - p(fib(c - 8)))


# --- check table ---------------------------------------------------------------


@dataclass(frozen=True)
class RangeRule:
    """``fn(c) <relation> bound`` for every c in [c0, c_max].

    ``need`` is the weaker ``(relation, first c)`` against 0 that the
    surrounding argument actually relies on, when that differs from the
    stated constant. It becomes a separate ``<name>.sign`` check.
    """

    name: str
    relation: str
    bound: Exact
    bound_text: str
    c0: int
    fn: Callable[[int], Exact]
    gating: bool = True
    note: str = ""
    need: tuple[str, int] | None = None


def final_a4_aprime_ge_7_actual(c: int) -> Fraction:
    """min over a' >= 7 of (m(4, c-5, c) - m(a', c-3-a', c-1)) / F(c)^2."""
    m1 = m_tilde(3, fib(c - 5), fib(c))
    m2 = max(m_tilde(fib(ap), fib(c - 3 - ap), fib(c - 1)) for ap in range(7, (c - 3) // 2 + 1))
    return Fraction(m1 - m2, fib(c) ** 2)


_RANGE_CHECKS: list[RangeRule] = [
    RangeRule("gap1.m222_vs_phi", "<", 1, "1", 5, gap1_top_ratio,
              note="5 m(2,2,c)/phi^(2c); the largest m for a given c"),
    RangeRule("gap1.a_ge_4_floor", ">", phi_pow(-4), "phi^-4", 9, lambda c: _min_ratio(c, 4, 1),
              note="min over a>=4 of 5 m(a,c-1-a,c)/phi^(2c)"),
    RangeRule("gap1.sum_ab_floor", ">", phi_pow(-2), "phi^-2", 7, lambda c: _min_ratio(c, 2, 2),
              note="min over a>=2 of 5 m(a,c-2-a,c)/phi^(2c)"),
    RangeRule("gap2.a2.c_eq_b3", ">", 0, "0", 10, gap2_b3),
    RangeRule("gap2.a2.c_eq_b4", ">=", D("0.16"), "0.16", 5, gap2_b4),
    RangeRule("gap2.a3.c_ge_b5", ">", D("0.1"), "0.1", 8, gap2_a3_b5),
    RangeRule("gap2.a3.c_eq_b4", ">=", D("0.05"), "0.05", 7, gap2_a3_b4),
    RangeRule("shift1.a_ge_6", "<=", D("-0.0002"), "-0.0002", 19, shift1_a_ge_6, need=("<", 19)),
    RangeRule("shift1.a5", "<=", D("-0.004"), "-0.004", 12, shift1_a5, need=("<", 19)),
    RangeRule("shift1.a3", "<=", D("-0.007"), "-0.007", 9, shift1_a3, need=("<", 19)),
    RangeRule("shift1.a4", "<=", D("-0.008"), "-0.008", 9, shift1_a4, need=("<", 19)),
    RangeRule("shift1.a2", "<=", D("-0.0009"), "-0.0009", 13, shift1_a2, need=("<", 19)),
    RangeRule("shift1.aprime2", "<=", D("-0.015"), "-0.015", 11, shift1_aprime2, need=("<", 19)),
    RangeRule("a2a2.left", ">=", D("-0.0671"), "-0.0671", 11, a2a2_left),
    RangeRule("a2a2.right", "<=", D("-0.0998"), "-0.0998", 11, a2a2_right),
    RangeRule("a2a2.middle_upper", "<=", D("-0.0891"), "-0.0891", 11, lambda c: a2a2_middle(c, 1)),
    RangeRule("a2a2.middle_lower", ">=", D("-0.0913"), "-0.0913", 11, lambda c: a2a2_middle(c, -1)),
    RangeRule("a2a2.k_closed_form", "==", 0, "0", 11,
              lambda c: a2a2_k(c) - (-fib(c - 3) * fib(c - 4) + 3 * (-1) ** (c - 3)),
              note="k minus (-F(c-3)F(c-4) + 3(-1)^(c-3))"),
    RangeRule("a2a2.root_bracket", ">", 0, "0", 11, a2a2_bracket,
              note="p(F(c-9)) > k > p(F(c-8)) in integers"),
    RangeRule("final.a2.lower", ">", D("0.347"), "0.347", 11, final_a2_lower,
              note="5 m(2,c-3,c)/phi^(2c)"),
    RangeRule("final.a2.upper", "<", D("0.346"), "0.346", 11, final_a2_upper,
              note="max over t<=5, a'>=2 of 5 m(a',c-1-t-a',c-1)/phi^(2c)"),
    RangeRule("final.a2.upper_bound", "<", D("0.346"), "0.346", 11, final_a2_upper_bound,
              note="max over t<=5 of phi^-2 U(2,t,c-1)"),
    RangeRule("final.a2.upper_bound.variant_phi6", "<", D("0.346"), "0.346", 11, final_a2_upper_bound_phi6,
              gating=False, note="same bound written with phi^(6-2c) instead of phi^(4-2c)"),
    RangeRule("final.a4.aprime_ge_7", ">=", D("0.01"), "0.01", 20, final_a4_aprime_ge_7, need=(">", 20)),
    RangeRule("final.a4.aprime_ge_7.actual", ">=", D("0.01"), "0.01", 20, final_a4_aprime_ge_7_actual,
              gating=False, note="true difference over all a' >= 7, no Binet relaxation"),
    RangeRule("final.a4.aprime6", ">=", D("0.004"), "0.004", 13, final_a4_aprime6, need=(">", 20)),
    RangeRule("final.a4.aprime2", "<=", D("-0.005"), "-0.005", 9, final_a4_aprime2, need=("<", 20),
              note="second triple (2, c-5, c-1)"),
    RangeRule("final.a4.aprime2.variant_fc4", "<=", D("-0.005"), "-0.005", 9, lambda c: final_a4_aprime2(c, 4),
              gating=False, note="same bound written with F(c-4) instead of F(b') = F(c-5)"),
]


def _constant_checks() -> list[tuple]:
    L419, L227, L319 = karamata_L((4, 1, 9)), karamata_L((2, 2, 7)), karamata_L((3, 1, 9))
    U218 = phi_pow(-2) * karamata_U((2, 1, 8))
    p = phi_pow
    same_c_up = p(1) * (1 - 2 * p(-6)) / (1 + p(-4) + p(-8) + p(-12))
    same_c_down = p(-1) * (1 + 2 * p(-6) + p(-14)) / (1 - p(-4) - p(-8))
    return [
        # (name, value, relation, bound, bound text[, gating])
        ("karamata.L419", L419, ">", D("1.025") * p(-4), "1.025 phi^-4"),
        ("karamata.L227", L227, ">", D("1.04") * p(-2), "1.04 phi^-2"),
        ("karamata.L319", L319, ">", D("0.14"), "0.14"),
        ("karamata.U218", U218, "<", D("0.139"), "0.139"),
        ("karamata.0.14_gt_0.139", D("0.14"), ">", D("0.139"), "0.139"),
        ("final.a2.lower_limit", 1 + p(-6) - 3 * p(-3), ">", D("0.347"), "0.347"),
        # 1 - 3/(4 sqrt2) - 5/16 > 0  <=>  (11*4)^2 * 2 - (3*16)^2 > 0
        ("gap2.sqrt2_constant", 2 * 44 ** 2 - 48 ** 2, ">", 0, "0"),
        ("gap2.a2.c_eq_b3.tabulated", 1 + D("0.2360") ** 2 - 3 * D("0.2361") - D(1, 4) - D(1, 16), ">", 0, "0"),
        ("samec.sum_up", same_c_up, ">=", D("1.22"), "1.22"),
        ("samec.sum_down", same_c_down, "<", D("0.83"), "0.83"),
        ("samec.0.83_lt_8/9", D("0.83"), "<", D(8, 9), "8/9"),
        ("positivity.quotient_sum", 1 / D("0.6") + D("0.6667"), "<", D("2.4"), "2.4"),
        # the maximum exactly as printed, with phi^7 in place of phi^t at t = 5
        ("final.a2.upper_bound.printed_max",
         p(-2) - THREE_OVER_SQRT5 * p(-7) + (1 + THREE_OVER_SQRT5 * p(7)) * 2 * p(-16) + 9 * p(-22),
         "<", D("0.346"), "0.346", False),
    ]


def _range_check(rule: RangeRule, c_max: int) -> AuditCheck:
    check = AuditCheck(rule.name, rule.relation, rule.bound, rule.bound_text,
                       f"{rule.c0}<=c<={c_max}", gating=rule.gating, note=rule.note,
                       needed=rule.gating and rule.need is None)
    for c in range(rule.c0, c_max + 1):
        check.observe(c, rule.fn(c))
    return check


def _sign_check(rule: RangeRule, c_max: int) -> AuditCheck:
    rel, c0 = rule.need
    check = AuditCheck(rule.name + ".sign", rel, 0, "0", f"{c0}<=c<={c_max}", tier="sign",
                       note="sign the argument relies on")
    for c in range(c0, c_max + 1):
        check.observe(c, rule.fn(c))
    return check


def growth_check(n_max: int) -> AuditCheck:
    """F(n+1) > sqrt2 F(n) as F(n+1)^2 - 2F(n)^2 > 0."""
    check = AuditCheck("growth.sqrt2", ">", 0, "0", f"2<=n<={n_max}", note="F(n+1)^2 - 2 F(n)^2")
    for n in range(2, n_max + 1):
        check.observe(n, fib(n + 1) ** 2 - 2 * fib(n) ** 2)
    return check


def audit_names() -> list[str]:
    names = ["growth.sqrt2"] + [c[0] for c in _constant_checks()]
    for rule in _RANGE_CHECKS:
        names.append(rule.name)
        if rule.need:
            names.append(rule.name + ".sign")
    return names


def audit_proof_bounds(c_max: int = 200, only: Iterable[str] | None = None,
                       map_fn: Callable = map) -> AuditReport:
    """Run every check up to ``c_max``; ``map_fn`` may be a pool's ``map``.

    ``report.passed`` requires every stated constant to hold on its stated
    range. ``report.sound`` only requires the checks the argument depends on:
    for a constant with a ``.sign`` sibling, that sibling replaces it.
    """
    if c_max < MIN_C_MAX:
        raise ValueError(f"c_max must be >= {MIN_C_MAX} (the largest threshold), got {c_max}")
    wanted = None if only is None else set(only)
    report = AuditReport()
    if wanted is None or "growth.sqrt2" in wanted:
        report.checks.append(growth_check(c_max))
    for name, value, rel, bound, text, *flag in _constant_checks():
        if wanted is not None and name not in wanted:
            continue
        gating = flag[0] if flag else True
        check = AuditCheck(name, rel, bound, text, "constant", gating=gating, needed=gating)
        check.observe(None, value)
        report.checks.append(check)
    jobs = []
    for rule in _RANGE_CHECKS:
        if wanted is None or rule.name in wanted:
            jobs.append((rule.name, False, c_max))
        if rule.need and (wanted is None or rule.name + ".sign" in wanted):
            jobs.append((rule.name, True, c_max))
    report.checks.extend(map_fn(_run_job, jobs))
    return report


def _rule(name: str) -> RangeRule:
    for rule in _RANGE_CHECKS:
        if rule.name == name:
            return rule
    raise KeyError(name)


def _run_job(job: tuple[str, bool, int]) -> AuditCheck:
    name, sign, c_max = job
    rule = _rule(name)
    return _sign_check(rule, c_max) if sign else _range_check(rule, c_max)


def value_at(name: str, c: int) -> Exact:
    """Evaluate one range check's expression at a single c."""
    return _rule(name).fn(c)
