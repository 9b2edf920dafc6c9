"""Closed-form generating functions against direct sums, oracles, and each
other; the five-step chain behind the half-weighted closed form; the parity
and mod-4 consequences; and the check runner's report plumbing."""

import json

import pytest

from overq.enumeration import divisor_count, oracle_series, over_qbinom_box_oracle
from overq.identities import (
    ALL_CHECKS,
    check_abr,
    check_bk,
    check_corollary,
    check_oqbinom_pbar,
    check_pbar_g_relation,
    check_th1,
    check_th2,
    check_three_cases,
    gf_G,
    gf_abr,
    gf_bk,
    gf_g_direct,
    gf_overline_total,
    gf_p_exact_low,
    gf_pbar,
    gf_pbar_direct,
    lambert_divisor,
    proof_chain_theorem1,
    run_checks,
)
from overq.series import coeff, equal_to_order, mul_one_minus, one


def ints(s, lo=1):
    return [int(coeff(s, e)) for e in range(lo, s.prec)]


# -- generating functions ----------------------------------------------------------


def test_lambert_series_is_the_divisor_series():
    s = lambert_divisor(40)
    assert s.lo == 1
    for n in range(1, 40):
        assert coeff(s, n) == divisor_count(n), n


def test_gf_bk_values():
    assert coeff(gf_bk(1, 6), 4) == 4
    assert ints(gf_bk(1, 6)) == [1, 2, 3, 4, 5]
    ok, mismatch = equal_to_order(gf_bk(3, 31), oracle_series("p_t", 3, 30), 30)
    assert ok, mismatch


def test_gf_abr_values():
    assert coeff(gf_abr(2, 8), 5) == 1
    ok, mismatch = equal_to_order(
        gf_abr(2, 31), oracle_series("p_exact_t", 2, 30), 30
    )
    assert ok, mismatch
    with pytest.raises(ValueError):
        gf_abr(1, 10)


def test_gf_exact_low_spread_values():
    ok, _ = equal_to_order(gf_p_exact_low(0, 31),
                           oracle_series("p_exact_t", 0, 30), 30)
    assert ok
    ok, _ = equal_to_order(gf_p_exact_low(1, 31),
                           oracle_series("p_exact_t", 1, 30), 30)
    assert ok
    with pytest.raises(ValueError):
        gf_p_exact_low(2, 10)


def test_gf_G_values():
    assert coeff(gf_G(1, 6), 4) == 8
    assert coeff(gf_G(2, 6), 4) == 12
    assert ints(gf_G(1, 6)) == [2, 4, 6, 8, 10]
    with pytest.raises(ValueError):
        gf_G(0, 10)


def test_gf_pbar_values():
    assert coeff(gf_pbar(0, 6), 4) == 6
    assert coeff(gf_pbar(1, 6), 4) == 10
    assert coeff(gf_pbar(1, 7), 5) == 16
    s = gf_pbar(1, 31)
    for n in range(1, 31):
        assert coeff(s, n) == 4 * n - 2 * divisor_count(n), n


def test_direct_sums_match_closed_forms():
    assert ints(gf_pbar_direct(0, 6)) == [2, 4, 4, 6, 4]
    assert coeff(gf_pbar_direct(1, 6), 4) == 10
    ok, _ = equal_to_order(gf_pbar_direct(3, 41), gf_pbar(3, 41), 40)
    assert ok
    assert coeff(gf_g_direct(1, 6), 4) == 8
    assert ints(gf_g_direct(1, 3)) == [2, 4]
    ok, _ = equal_to_order(gf_g_direct(2, 41), gf_G(2, 41), 40)
    assert ok


def test_gf_overline_total_values():
    s = gf_overline_total(26)
    assert coeff(s, 0) == 1
    assert coeff(s, 4) == 14
    from overq.enumeration import count_opbar_total
    for n in range(1, 26):
        assert coeff(s, n) == count_opbar_total(n), n


def test_closed_form_algebraic_identity():
    # gf_G(t) (1 - q^t) + 1 = (-q;q)_t / (q;q)_t
    from overq.series import div_one_minus

    for t in range(1, 9):
        lhs = mul_one_minus(gf_G(t, 41), 1, t) + one(41)
        rhs = one(41)
        for k in range(1, t + 1):
            rhs = mul_one_minus(rhs, -1, k)
            rhs = div_one_minus(rhs, 1, k)
        ok, mismatch = equal_to_order(lhs, rhs, 40)
        assert ok, (t, mismatch)


def test_coefficients_even_integral_and_monotone_in_t():
    series = {t: gf_pbar(t, 41) for t in range(0, 6)}
    for t, s in series.items():
        for n in range(1, 41):
            c = coeff(s, n)
            assert c.denominator == 1 and c >= 0 and c.numerator % 2 == 0, (t, n)
            if t > 0:
                assert c >= coeff(series[t - 1], n), (t, n)


def test_case_one_coefficient_counts_parts_up_to_t():
    # overpartitions of 3 with all parts <= 2: 2+1 four ways, 1+1+1 two ways
    assert coeff(over_qbinom_box_oracle(2, 8), 3) == 6
    # the same count appears inside the three-case split at t=2 via
    # gf_pbar(2) - case(2) - case(3); the split itself is checked below


# -- identity checks ---------------------------------------------------------------


def test_theorem_checks_pass():
    assert check_th1(1, 30).passed
    assert check_th2(0, 30).passed
    assert check_bk(4, 40).passed
    assert check_abr(3, 30).passed


def test_relation_check_and_its_smallest_instance():
    assert check_pbar_g_relation(1, 40).passed
    assert check_pbar_g_relation(8, 60).passed
    # 10 + 6 = 2 * 8 at n = 4
    assert coeff(gf_pbar(1, 5), 4) + coeff(gf_pbar(0, 5), 4) \
        == 2 * coeff(gf_G(1, 5), 4)


def test_box_polynomial_expansion_check():
    assert check_oqbinom_pbar(0, 30).passed
    assert check_oqbinom_pbar(2, 30).passed


def test_three_case_split_check():
    assert check_three_cases(1, 30).passed
    assert check_three_cases(2, 30).passed


def test_corrupt_hook_reports_first_mismatch():
    report = check_th1(2, 20, _corrupt=True)
    assert report.status == "fail"
    assert report.first_mismatch is not None
    assert report.first_mismatch.exponent == 2
    assert not report.passed


def test_proof_chain_passes():
    assert proof_chain_theorem1(1, 25).passed
    assert proof_chain_theorem1(4, 40).passed


@pytest.mark.parametrize("step", [1, 2, 3, 4, 5])
def test_proof_chain_perturbation_fails_at_named_step(step):
    report = proof_chain_theorem1(2, 20, perturb_step=step)
    assert report.status == "fail"
    assert report.first_mismatch is not None
    label = f"({'i' * step})" if step <= 3 else ("(iv)" if step == 4 else "(v)")
    assert label in report.message


def test_proof_chain_perturb_domain():
    with pytest.raises(ValueError):
        proof_chain_theorem1(2, 20, perturb_step=0)
    with pytest.raises(ValueError):
        proof_chain_theorem1(2, 20, perturb_step=6)


def test_corollary_check():
    assert check_corollary(1, 30).passed
    # n = 4 is a square: count 10 = 2 mod 4; n = 5 is not: count 16 = 0 mod 4
    assert coeff(gf_pbar(1, 6), 4) % 4 == 2
    assert coeff(gf_pbar(1, 6), 5) % 4 == 0
    with pytest.raises(ValueError):
        check_corollary(-1, 30)
    with pytest.raises(ValueError):
        check_corollary(1, 0)


# -- runner and report plumbing ----------------------------------------------------


def test_run_checks_single_family():
    reports = run_checks("relation", 3, 20)
    assert [r.check.params["t"] for r in reports] == [1, 2, 3]
    assert all(r.passed for r in reports)


def test_run_checks_all_is_sorted_and_passes():
    reports = run_checks("all", 2, 12)
    assert all(r.passed for r in reports)
    keys = [(r.check.name, json.dumps(r.check.params, sort_keys=True))
            for r in reports]
    assert keys == sorted(keys)
    assert {r.check.name for r in reports} == set(ALL_CHECKS)


def test_run_checks_all_skips_families_below_their_minimum():
    reports = run_checks("all", 0, 10)
    assert {r.check.name for r in reports} == {"th2", "oqbinom", "chu", "corollary"}


def test_run_checks_domain_errors():
    with pytest.raises(ValueError):
        run_checks("th1", 0, 20)
    with pytest.raises(ValueError):
        run_checks("abr", 1, 20)
    with pytest.raises(ValueError):
        run_checks("nope", 3, 20)
    with pytest.raises(ValueError):
        run_checks("th1", 3, 0)


def test_run_checks_inject_mismatch_hits_th1_only():
    reports = run_checks("th1", 3, 15, inject_mismatch=True)
    assert all(r.status == "fail" for r in reports)
    reports = run_checks("relation", 3, 15, inject_mismatch=True)
    assert all(r.passed for r in reports)


def test_report_dict_schema():
    report = run_checks("th1", 1, 10)[0]
    d = report.to_dict()
    assert list(d) == ["name", "params", "status", "first_mismatch", "message"]
    assert d["name"] == "th1" and d["params"] == {"t": 1}
    assert d["status"] == "pass" and d["first_mismatch"] is None
    bad = check_th1(1, 10, _corrupt=True).to_dict()
    m = bad["first_mismatch"]
    assert set(m) == {"exponent", "lhs", "rhs"}
    assert isinstance(m["exponent"], int)
    assert isinstance(m["lhs"], str) and isinstance(m["rhs"], str)


def test_report_invariant_fail_requires_mismatch():
    from overq.reports import IdentityCheck, VerificationReport

    check = IdentityCheck("th1", {"t": 1}, 5)
    with pytest.raises(ValueError):
        VerificationReport(check, "fail", None, "missing mismatch")
    from overq.series import MismatchInfo
    from fractions import Fraction

    info = MismatchInfo(2, Fraction(1), Fraction(2))
    with pytest.raises(ValueError):
        VerificationReport(check, "pass", info, "unexpected mismatch")
