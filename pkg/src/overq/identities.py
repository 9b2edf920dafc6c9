"""Generating functions and identity checks.

Each gf_* function builds a closed form as an exact windowed series; each
check_* function compares a closed form against an independently computed
series (a direct summand-by-summand sum, an enumeration oracle, or both)
and returns a VerificationReport.  t is always the bound on the spread of
a partition (largest part minus smallest part).

Series produced here, with the weight conventions of :mod:`.enumeration`:

* gf_bk(t): partitions with spread <= t.
* gf_abr(t): partitions with spread exactly t (t >= 2).
* gf_G(t): overpartitions with spread <= t, largest part not overlined
  when the spread is exactly t.
* gf_pbar(t): overpartitions with spread <= t.
* gf_overline_total: all overpartitions.
"""

from __future__ import annotations

from fractions import Fraction
from math import isqrt
from typing import List, Optional

from .enumeration import divisor_count, oracle_series
from .qfunctions import PhiSpec, over_qbinom_sum, phi, pochhammer_inf, verify_chu
from .reports import (
    STATUS_ERROR,
    STATUS_FAIL,
    STATUS_PASS,
    IdentityCheck,
    VerificationReport,
    comparison_report,
)
from .series import (
    MismatchInfo,
    QMonomial,
    QSeries,
    add,
    div_one_minus,
    equal_to_order,
    invert,
    monomial,
    mul,
    mul_one_minus,
    one,
    zero,
)

_HALF = Fraction(1, 2)


def _require_order(order: int) -> None:
    if order < 1:
        raise ValueError(f"comparison order must be >= 1, got {order}")


# -- building blocks -------------------------------------------------------------


def lambert_divisor(prec: int) -> QSeries:
    """sum_{m>=1} q^m / (1 - q^m) = sum_{n>=1} d(n) q^n, d = divisor count."""
    width = max(prec - 1, 0)
    coeffs = [0] * width
    for m in range(1, prec):
        for j in range(m, prec, m):
            coeffs[j - 1] += 1
    return QSeries._make(1, prec, coeffs)


def _ratio_minus_one(t: int, prec: int) -> QSeries:
    """(-q;q)_t / (q;q)_t - 1: nonempty overpartitions with parts <= t."""
    s = one(prec)
    for k in range(1, t + 1):
        s = mul_one_minus(s, -1, k)
    for k in range(1, t + 1):
        s = div_one_minus(s, 1, k)
    return add(s, one(prec).scale(-1))


def gf_G(t: int, prec: int) -> QSeries:
    """Closed form ((-q;q)_t/(q;q)_t - 1) / (1 - q^t) for the half-weighted
    spread-bounded overpartition counts (see module docstring)."""
    if t < 1:
        raise ValueError(f"gf_G needs t >= 1, got {t}")
    return div_one_minus(_ratio_minus_one(t, prec), 1, t)


def gf_pbar(t: int, prec: int) -> QSeries:
    """Closed form for overpartitions with spread at most t:

        2 (-1)^t [ sum_n d(n) q^n
                   + sum_{n=1}^t (-1)^n ((-q;q)_n/(q;q)_n - 1)/(1 - q^n) ]
    """
    if t < 0:
        raise ValueError(f"gf_pbar needs t >= 0, got {t}")
    acc = lambert_divisor(prec)
    for n in range(1, t + 1):
        term = div_one_minus(_ratio_minus_one(n, prec), 1, n)
        acc = add(acc, term.scale(-1 if n % 2 else 1))
    return acc.scale(2 if t % 2 == 0 else -2)


def gf_pbar_direct(t: int, prec: int) -> QSeries:
    """Same series as gf_pbar, summed one smallest part m at a time:

        sum_{m>=1} 2 q^m/(1-q^m) prod_{j=1}^t (1+q^{m+j})/(1-q^{m+j})

    Summand m has valuation exactly m (asserted), so m stops at prec.
    """
    if t < 0:
        raise ValueError(f"gf_pbar_direct needs t >= 0, got {t}")
    acc = zero(prec)
    for m in range(1, prec):
        s = div_one_minus(monomial(2, m, prec), 1, m)
        for j in range(1, t + 1):
            s = mul_one_minus(s, -1, m + j)
            s = div_one_minus(s, 1, m + j)
        assert s.valuation() == m
        acc = add(acc, s)
    return acc


def gf_g_direct(t: int, prec: int) -> QSeries:
    """The gf_G series summed one smallest part m at a time: the factor for
    the largest admissible value m+t is 1/(1-q^{m+t}), without the
    (1+q^{m+t}) overline choice."""
    if t < 1:
        raise ValueError(f"gf_g_direct needs t >= 1, got {t}")
    acc = zero(prec)
    for m in range(1, prec):
        s = div_one_minus(monomial(2, m, prec), 1, m)
        for j in range(1, t):
            s = mul_one_minus(s, -1, m + j)
            s = div_one_minus(s, 1, m + j)
        s = div_one_minus(s, 1, m + t)
        assert s.valuation() == m
        acc = add(acc, s)
    return acc


def gf_bk(t: int, prec: int) -> QSeries:
    """Closed form (1/(q;q)_t - 1) / (1 - q^t) for partitions with spread
    at most t."""
    if t < 1:
        raise ValueError(f"gf_bk needs t >= 1, got {t}")
    s = one(prec)
    for k in range(1, t + 1):
        s = div_one_minus(s, 1, k)
    s = add(s, one(prec).scale(-1))
    return div_one_minus(s, 1, t)


def gf_abr(t: int, prec: int) -> QSeries:
    """Closed form for partitions with spread exactly t, valid for t >= 2:

        q^{t-1}(1-q)/((1-q^t)(1-q^{t-1})) * (1 - 1/(q;q)_t)
        + q^t/((1-q^{t-1})(q;q)_t)

    For t = 0 the exact-spread series is sum d(n) q^n and for t = 1 it is
    sum (n - d(n)) q^n; both lie outside this formula's domain.

    Raises:
        ValueError: if t < 2.
    """
    if t < 2:
        raise ValueError(f"gf_abr needs t >= 2, got {t}")
    p1 = mul_one_minus(monomial(1, t - 1, prec), 1, 1)
    p1 = div_one_minus(div_one_minus(p1, 1, t), 1, t - 1)
    p2 = p1.scale(-1)
    for k in range(1, t + 1):
        p2 = div_one_minus(p2, 1, k)
    p3 = div_one_minus(monomial(1, t, prec), 1, t - 1)
    for k in range(1, t + 1):
        p3 = div_one_minus(p3, 1, k)
    return add(add(p1, p2), p3)


def gf_p_exact_low(t: int, prec: int) -> QSeries:
    """Exact-spread partition series for the two t values outside gf_abr's
    domain: t = 0 gives sum d(n) q^n, t = 1 gives sum (n - d(n)) q^n."""
    if t == 0:
        return lambert_divisor(prec)
    if t == 1:
        coeffs = [n - divisor_count(n) for n in range(1, prec)]
        return QSeries._make(1, prec, coeffs)
    raise ValueError(f"gf_p_exact_low covers t in {{0, 1}}, got {t}")


def gf_overline_total(prec: int) -> QSeries:
    """All overpartitions: (-q;q)_oo / (q;q)_oo."""
    num = pochhammer_inf(QMonomial(-1, 1), prec)
    den = pochhammer_inf(QMonomial(1, 1), prec)
    return mul(num, invert(den))


# -- checks ----------------------------------------------------------------------


def _triple_report(
    name: str,
    t: int,
    order: int,
    closed: QSeries,
    direct: Optional[QSeries],
    oracle: QSeries,
    direct_label: str = "direct sum",
) -> VerificationReport:
    """Compare a closed form against an optional direct sum and an oracle."""
    check = IdentityCheck(name, {"t": t}, order)
    if direct is not None:
        equal, mismatch = equal_to_order(closed, direct, order)
        if not equal:
            return VerificationReport(
                check, STATUS_FAIL, mismatch,
                f"closed form deviates from the {direct_label}",
            )
    equal, mismatch = equal_to_order(closed, oracle, order)
    if not equal:
        return VerificationReport(
            check, STATUS_FAIL, mismatch,
            "closed form deviates from the enumeration oracle",
        )
    what = f"{direct_label} and enumeration" if direct is not None else "enumeration"
    return VerificationReport(
        check, STATUS_PASS, None, f"closed form matches {what} to order {order}"
    )


def check_th1(t: int, order: int, _corrupt: bool = False) -> VerificationReport:
    """gf_G(t) against its direct sum and the count_g oracle.

    _corrupt is a test hook: it multiplies the closed form by (1 + q) so
    failure reporting can be exercised deliberately.
    """
    _require_order(order)
    prec = order + 1
    closed = gf_G(t, prec)
    if _corrupt:
        closed = mul_one_minus(closed, -1, 1)
    return _triple_report(
        "th1", t, order, closed, gf_g_direct(t, prec), oracle_series("g_t", t, order)
    )


def check_th2(t: int, order: int) -> VerificationReport:
    """gf_pbar(t) against its direct sum and the count_opbar_bounded oracle."""
    _require_order(order)
    prec = order + 1
    return _triple_report(
        "th2", t, order, gf_pbar(t, prec), gf_pbar_direct(t, prec),
        oracle_series("pbar_t", t, order),
    )


def check_bk(t: int, order: int) -> VerificationReport:
    """gf_bk(t) against the count_p_bounded_diff oracle."""
    _require_order(order)
    return _triple_report(
        "bk", t, order, gf_bk(t, order + 1), None,
        oracle_series("p_t", t, order),
    )


def check_abr(t: int, order: int) -> VerificationReport:
    """gf_abr(t) against the count_p_exact_diff oracle (t >= 2)."""
    _require_order(order)
    return _triple_report(
        "abr", t, order, gf_abr(t, order + 1), None,
        oracle_series("p_exact_t", t, order),
    )


def check_pbar_g_relation(t: int, order: int) -> VerificationReport:
    """gf_pbar(t) + gf_pbar(t-1) = 2 gf_G(t): dropping the spread bound by
    one and doubling the half-weighted series agree."""
    _require_order(order)
    if t < 1:
        raise ValueError(f"relation needs t >= 1, got {t}")
    prec = order + 1
    lhs = add(gf_pbar(t, prec), gf_pbar(t - 1, prec))
    rhs = gf_G(t, prec).scale(2)
    check = IdentityCheck("relation", {"t": t}, order)
    equal, mismatch = equal_to_order(lhs, rhs, order)
    return comparison_report(
        check, equal, mismatch,
        f"adjacent spread bounds recombine to order {order}",
        "adjacent spread bounds fail to recombine",
    )


def check_oqbinom_pbar(t: int, order: int) -> VerificationReport:
    """gf_pbar(t) as a sum over the largest part r of overpartition
    q-binomials:  2 sum_{r>=1} q^r/(1-q^r) * oqbinom(t, r-1)."""
    _require_order(order)
    if t < 0:
        raise ValueError(f"oqbinom check needs t >= 0, got {t}")
    prec = order + 1
    acc = zero(prec)
    for r in range(1, prec):
        geo = div_one_minus(monomial(1, r, prec), 1, r)
        poly = over_qbinom_sum(t, r - 1, prec=prec - r)
        acc = add(acc, mul(geo, poly))
    lhs = acc.scale(2)
    check = IdentityCheck("oqbinom", {"t": t}, order)
    equal, mismatch = equal_to_order(lhs, gf_pbar(t, prec), order)
    return comparison_report(
        check, equal, mismatch,
        f"largest-part expansion over box polynomials matches to order {order}",
        "largest-part expansion deviates from the closed form",
    )


def check_three_cases(t: int, order: int) -> VerificationReport:
    """The three-way split of spread-bounded overpartitions:

    (1) parts all <= t:            (-q;q)_t/(q;q)_t - 1
    (2) spread == t, smallest part overlined:  (gf_pbar(t) - gf_pbar(t-1))/2
    (3) the rest, via box polynomials: sum_r q^r/(1-q^r)
                                        (oqbinom(t, r) - oqbinom(t-1, r))

    Passes when the cases sum to gf_pbar(t) and case (2)'s closed form
    matches its own direct sum.
    """
    _require_order(order)
    if t < 1:
        raise ValueError(f"three-case split needs t >= 1, got {t}")
    prec = order + 1
    case1 = _ratio_minus_one(t, prec)

    case2 = add(gf_pbar(t, prec), gf_pbar(t - 1, prec).scale(-1)).scale(_HALF)
    case2_direct = zero(prec)
    m = 1
    while 2 * m + t < prec:
        s = div_one_minus(monomial(2, m, prec), 1, m)
        for j in range(1, t):
            s = mul_one_minus(s, -1, m + j)
            s = div_one_minus(s, 1, m + j)
        s = div_one_minus(s.times_monomial(1, m + t), 1, m + t)
        case2_direct = add(case2_direct, s)
        m += 1

    case3 = zero(prec)
    for r in range(1, prec):
        big = over_qbinom_sum(t, r, prec=prec - r)
        small = over_qbinom_sum(t - 1, r, prec=prec - r)
        geo = div_one_minus(monomial(1, r, prec), 1, r)
        case3 = add(case3, mul(geo, add(big, small.scale(-1))))

    check = IdentityCheck("cases", {"t": t}, order)
    equal, mismatch = equal_to_order(case2, case2_direct, order)
    if not equal:
        return VerificationReport(
            check, STATUS_FAIL, mismatch,
            "case (2) closed form deviates from its direct sum",
        )
    total = add(add(case1, case2), case3)
    equal, mismatch = equal_to_order(total, gf_pbar(t, prec), order)
    return comparison_report(
        check, equal, mismatch,
        f"three cases sum to the full series to order {order}",
        "three cases fail to sum to the full series",
    )


_CHAIN_LABELS = ("(i)", "(ii)", "(iii)", "(iv)", "(v)")


def proof_chain_theorem1(
    t: int, order: int, perturb_step: Optional[int] = None
) -> VerificationReport:
    """Five expressions that should all equal gf_G(t)/2, compared pairwise:

    (i)   sum_{m>=1} q^m (q;q)_{m-1} (-q;q)_{m+t-1} / ((q;q)_{m+t} (-q;q)_m)
    (ii)  q(-q;q)_t/((1+q)(q;q)_{t+1}) * 3phi2(q, q, -q^{t+1}; -q^2, q^{t+2}; q)
    (iii) the same prefactor times (q^{t+1};q)_oo (q^2;q)_oo /
          ((q^{t+2};q)_oo (q;q)_oo) * 3phi2(q, -q, q^{1-t}; -q^2, q^2; q^{t+1})
    (iv)  -(-q;q)_t/(2(1-q^t)(q;q)_t) * (2phi1(-1, q^{-t}; -q; q^{t+1}) - 1)
    (v)   gf_G(t)/2

    perturb_step (1-5) is a test hook multiplying that step by (1 + q) to
    force a mismatch.
    """
    _require_order(order)
    if t < 1:
        raise ValueError(f"proof chain needs t >= 1, got {t}")
    prec = order + 1
    steps: List[QSeries] = []

    # (i): incremental summand updates; B_{m+1}/B_m =
    # q (1-q^m)(1+q^{m+t}) / ((1+q^{m+1})(1-q^{m+t+1})).
    b = monomial(1, 1, prec)
    for k in range(1, t + 1):
        b = mul_one_minus(b, -1, k)
    for k in range(1, t + 2):
        b = div_one_minus(b, 1, k)
    b = div_one_minus(b, -1, 1)
    acc = b
    for m in range(2, prec):
        b = b.times_monomial(1, 1)
        b = mul_one_minus(b, 1, m - 1)
        b = mul_one_minus(b, -1, m - 1 + t)
        b = div_one_minus(b, -1, m)
        b = div_one_minus(b, 1, m + t)
        acc = add(acc, b)
    steps.append(acc)

    pref = monomial(1, 1, prec)
    for k in range(1, t + 1):
        pref = mul_one_minus(pref, -1, k)
    pref = div_one_minus(pref, -1, 1)
    for k in range(1, t + 2):
        pref = div_one_minus(pref, 1, k)

    # (ii)
    q = QMonomial(1, 1)
    phi2 = phi(
        PhiSpec(
            (q, q, QMonomial(-1, t + 1)),
            (QMonomial(-1, 2), QMonomial(1, t + 2)),
            q,
            prec,
        )
    )
    steps.append(mul(pref, phi2))

    # (iii)
    phi3 = phi(
        PhiSpec(
            (q, QMonomial(-1, 1), QMonomial(1, 1 - t)),
            (QMonomial(-1, 2), QMonomial(1, 2)),
            QMonomial(1, t + 1),
            prec,
        )
    )
    num = mul(
        pochhammer_inf(QMonomial(1, t + 1), prec), pochhammer_inf(QMonomial(1, 2), prec)
    )
    den = mul(
        pochhammer_inf(QMonomial(1, t + 2), prec), pochhammer_inf(q, prec)
    )
    steps.append(mul(mul(pref, mul(num, invert(den))), phi3))

    # (iv)
    phi4 = phi(
        PhiSpec(
            (QMonomial(-1, 0), QMonomial(1, -t)),
            (QMonomial(-1, 1),),
            QMonomial(1, t + 1),
            prec,
        )
    )
    f = one(prec)
    for k in range(1, t + 1):
        f = mul_one_minus(f, -1, k)
    for k in range(1, t + 1):
        f = div_one_minus(f, 1, k)
    f = div_one_minus(f, 1, t)
    steps.append(mul(f, add(phi4, one(prec).scale(-1))).scale(Fraction(-1, 2)))

    # (v)
    steps.append(gf_G(t, prec).scale(_HALF))

    if perturb_step is not None:
        if not 1 <= perturb_step <= 5:
            raise ValueError("perturb_step must be in 1..5")
        steps[perturb_step - 1] = mul_one_minus(steps[perturb_step - 1], -1, 1)

    check = IdentityCheck("proofchain", {"t": t}, order)
    for i in range(4):
        equal, mismatch = equal_to_order(steps[i], steps[i + 1], order)
        if not equal:
            return VerificationReport(
                check, STATUS_FAIL, mismatch,
                f"step {_CHAIN_LABELS[i]} deviates from step {_CHAIN_LABELS[i + 1]}",
            )
    return VerificationReport(
        check, STATUS_PASS, None,
        f"all five expressions agree pairwise to order {order}",
    )


def check_corollary(t: int, n_max: int) -> VerificationReport:
    """Arithmetic of the gf_pbar(t) coefficients, for n in [1, n_max]:
    every count is even, is congruent to twice the divisor count mod 4, and
    is divisible by 4 exactly when n is not a perfect square."""
    if t < 0:
        raise ValueError(f"corollary needs t >= 0, got {t}")
    if n_max < 1:
        raise ValueError(f"corollary needs n_max >= 1, got {n_max}")
    series = gf_pbar(t, n_max + 1)
    check = IdentityCheck("corollary", {"t": t, "n_max": n_max}, n_max)
    for n in range(1, n_max + 1):
        c = series.coeff(n)
        if c.denominator != 1:
            return VerificationReport(
                check, STATUS_ERROR, None,
                f"internal consistency: non-integer count {c} at q^{n}",
            )
        v = c.numerator
        if v % 2:
            return VerificationReport(
                check, STATUS_FAIL, MismatchInfo(n, Fraction(v % 2), Fraction(0)),
                f"count at q^{n} is odd",
            )
        expected = (2 * divisor_count(n)) % 4
        if v % 4 != expected:
            return VerificationReport(
                check, STATUS_FAIL,
                MismatchInfo(n, Fraction(v % 4), Fraction(expected)),
                f"count at q^{n} is not congruent to twice the divisor count mod 4",
            )
        square = isqrt(n) ** 2 == n
        if (v % 4 == 0) == square:
            return VerificationReport(
                check, STATUS_FAIL,
                MismatchInfo(n, Fraction(v % 4), Fraction(0 if not square else 2)),
                f"divisibility by 4 disagrees with the square test at n={n}",
            )
    return VerificationReport(
        check, STATUS_PASS, None,
        f"parity, mod-4 congruence and square test hold for n <= {n_max}",
    )


# -- check runner -----------------------------------------------------------------

# Lowest admissible t (or termination index for chu) per check family.
CHECK_MINIMUM = {
    "th1": 1,
    "th2": 0,
    "bk": 1,
    "abr": 2,
    "oqbinom": 0,
    "relation": 1,
    "cases": 1,
    "proofchain": 1,
    "chu": 0,
    "corollary": 0,
}

ALL_CHECKS = tuple(sorted(CHECK_MINIMUM))


def run_checks(
    selector: str, t_max: int, order: int, inject_mismatch: bool = False
) -> List[VerificationReport]:
    """Run one check family (or "all") for every admissible t up to t_max.

    With an explicit selector an empty t range is a domain error; under
    "all" the families whose minimum exceeds t_max are skipped.

    inject_mismatch corrupts the th1 closed form (test hook).
    """
    _require_order(order)
    if selector != "all" and selector not in CHECK_MINIMUM:
        raise ValueError(f"unknown check {selector!r}")
    names = ALL_CHECKS if selector == "all" else (selector,)
    reports: List[VerificationReport] = []
    for name in names:
        lo = CHECK_MINIMUM[name]
        if t_max < lo:
            if selector == "all":
                continue
            raise ValueError(
                f"check {name!r} needs t_max >= {lo}, got {t_max}"
            )
        for t in range(lo, t_max + 1):
            if name == "th1":
                reports.append(check_th1(t, order, _corrupt=inject_mismatch))
            elif name == "th2":
                reports.append(check_th2(t, order))
            elif name == "bk":
                reports.append(check_bk(t, order))
            elif name == "abr":
                reports.append(check_abr(t, order))
            elif name == "oqbinom":
                reports.append(check_oqbinom_pbar(t, order))
            elif name == "relation":
                reports.append(check_pbar_g_relation(t, order))
            elif name == "cases":
                reports.append(check_three_cases(t, order))
            elif name == "proofchain":
                reports.append(proof_chain_theorem1(t, order))
            elif name == "chu":
                reports.append(
                    verify_chu(QMonomial(-1, 0), t, QMonomial(-1, 1), order + 1)
                )
            elif name == "corollary":
                reports.append(check_corollary(t, order))
    reports.sort(key=lambda r: r.sort_key())
    return reports
