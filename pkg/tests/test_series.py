"""Series arithmetic: windows, ring behavior, inversion, error contracts."""

import random
from fractions import Fraction

import pytest

from overq.series import (
    EmptyWindowError,
    NotInvertibleError,
    PrecisionExceededError,
    QMonomial,
    QSeries,
    WindowViolationError,
    add,
    coeff,
    div,
    div_one_minus,
    equal_to_order,
    from_terms,
    geometric,
    invert,
    monomial,
    mul,
    mul_one_minus,
    one,
    zero,
)

F = Fraction


def series_eq(s, pairs, prec):
    """Exact coefficient check over the full window [s.lo, prec)."""
    want = dict(pairs)
    assert s.prec == prec
    for e in range(s.lo, prec):
        assert coeff(s, e) == want.get(e, 0), f"q^{e}"
    return True


# -- construction ------------------------------------------------------------------


def test_from_terms_constant():
    s = from_terms([(0, 1)], 5)
    assert s.lo == 0 and s.prec == 5
    assert series_eq(s, {0: 1}, 5)


def test_from_terms_empty_is_zero_window():
    s = from_terms([], 5)
    assert s.lo <= 0 and s.prec == 5
    assert all(coeff(s, e) == 0 for e in range(s.lo, 5))


def test_from_terms_laurent():
    s = from_terms([(-1, 1), (1, -2)], 3)
    assert s.lo == -1
    assert series_eq(s, {-1: 1, 1: -2}, 3)


def test_from_terms_duplicate_exponents_accumulate():
    s = from_terms([(2, 1), (2, 2), (0, 1)], 4)
    assert series_eq(s, {0: 1, 2: 3}, 4)


def test_from_terms_rejects_exponent_at_or_above_prec():
    with pytest.raises(WindowViolationError):
        from_terms([(5, 1)], 5)
    with pytest.raises(WindowViolationError):
        from_terms([(9, 1)], 5)


def test_floats_are_rejected_everywhere():
    with pytest.raises(TypeError):
        from_terms([(0, 0.5)], 3)
    with pytest.raises(TypeError):
        QMonomial(0.5, 1)
    with pytest.raises(TypeError):
        one(4).scale(1.5)


def test_monomial_requires_nonzero_coeff():
    with pytest.raises(ValueError):
        QMonomial(0, 3)


def test_values_are_immutable():
    s = one(4)
    with pytest.raises(AttributeError):
        s.prec = 10
    m = QMonomial(1, 1)
    with pytest.raises(AttributeError):
        m.exp = 2


def test_str_rendering():
    s = from_terms([(0, 1), (1, -1), (2, -1), (5, 1)], 8)
    assert str(s) == "1 - q - q^2 + q^5 + O(q^8)"
    assert str(zero(3)) == "0 + O(q^3)"


# -- add ---------------------------------------------------------------------------


def test_add_cancellation():
    a = from_terms([(0, 1), (1, 1)], 5)
    b = from_terms([(0, 1), (1, -1)], 5)
    assert series_eq(add(a, b), {0: 2}, 5)


def test_add_takes_min_precision():
    a = geometric(1, 4)
    s = add(a, zero(6))
    assert s.prec == 4
    assert series_eq(s, {0: 1, 1: 1, 2: 1, 3: 1}, 4)


def test_add_merges_windows():
    a = monomial(1, -1, 2)
    b = monomial(1, 1, 3)
    s = add(a, b)
    assert s.lo == -1 and s.prec == 2
    assert series_eq(s, {-1: 1, 1: 1}, 2)


# -- mul ---------------------------------------------------------------------------


def test_mul_telescopes_geometric():
    s = mul(from_terms([(0, 1), (1, -1)], 10), geometric(1, 10))
    assert s.prec == 10
    # 1 + O(q^9) is the weakest true statement; the full window is exact here
    assert series_eq(s, {0: 1}, 10)


def test_mul_polynomials():
    a = from_terms([(0, 1), (1, 1)], 4)
    b = from_terms([(0, 1), (2, 1)], 4)
    s = mul(a, b)
    assert [coeff(s, e) for e in range(4)] == [1, 1, 1, 1]


def test_mul_exponent_cancellation():
    s = mul(monomial(1, -1, 2), monomial(1, 1, 4))
    assert s.lo == 0
    assert coeff(s, 0) == 1


def test_mul_window_rule():
    a = QSeries(2, 7, [1, 0, 0, 0, 0])      # q^2, window [2, 7)
    b = QSeries(-1, 4, [1, 0, 0, 0, 0])     # q^-1, window [-1, 4)
    s = mul(a, b)
    assert s.lo == 1
    assert s.prec == min(7 + (-1), 4 + 2)
    assert coeff(s, 1) == 1


def test_mul_by_scalar():
    s = geometric(1, 4) * 3
    assert [coeff(s, e) for e in range(4)] == [3, 3, 3, 3]


# -- invert ------------------------------------------------------------------------


def test_invert_one_minus_q():
    s = invert(from_terms([(0, 1), (1, -1)], 6))
    assert s.lo == 0 and s.prec == 6
    assert all(coeff(s, e) == 1 for e in range(6))


def test_invert_constant():
    s = invert(from_terms([(0, 2)], 4))
    assert series_eq(s, {0: F(1, 2)}, 4)


def test_invert_with_valuation_shift():
    a = from_terms([(1, 1), (2, -1)], 6)     # q(1-q)
    b = invert(a)
    assert b.lo == -1 and b.prec == 4
    assert [coeff(b, e) for e in range(-1, 4)] == [1, 1, 1, 1, 1]
    prod = mul(a, b)
    ok, _ = equal_to_order(prod, one(prod.prec), prod.prec - 1)
    assert ok


def test_invert_error_contracts():
    with pytest.raises(NotInvertibleError):
        invert(zero(5))
    with pytest.raises(EmptyWindowError):
        invert(QSeries(3, 3, ()))


def test_div_is_invert_then_mul():
    num = from_terms([(0, 1), (1, 1)], 8)
    den = from_terms([(0, 1), (1, -1)], 8)
    s = div(num, den)
    # (1+q)/(1-q) = 1 + 2q + 2q^2 + ...
    assert coeff(s, 0) == 1
    assert all(coeff(s, e) == 2 for e in range(1, s.prec))


# -- coeff / equal_to_order --------------------------------------------------------


def test_coeff_window_contract():
    s = geometric(1, 5)
    assert coeff(s, 3) == 1
    assert coeff(s, -2) == 0
    with pytest.raises(PrecisionExceededError):
        coeff(s, 7)
    with pytest.raises(PrecisionExceededError):
        coeff(s, 5)


def test_equal_to_order_true():
    ok, mismatch = equal_to_order(invert(from_terms([(0, 1), (1, -1)], 22)),
                                  geometric(1, 22), 20)
    assert ok and mismatch is None


def test_equal_to_order_reports_first_mismatch():
    a = from_terms([(0, 1), (1, 1)], 6)
    b = from_terms([(0, 1), (1, -1)], 6)
    ok, mismatch = equal_to_order(a, b, 5)
    assert not ok
    assert mismatch.exponent == 1
    assert (mismatch.lhs, mismatch.rhs) == (1, -1)


def test_equal_to_order_sees_negative_exponents():
    a = monomial(1, -2, 4)
    b = zero(4)
    ok, mismatch = equal_to_order(a, b, 3)
    assert not ok and mismatch.exponent == -2


def test_equal_to_order_precision_guard():
    with pytest.raises(PrecisionExceededError):
        equal_to_order(one(5), one(9), 5)


# -- binomial-factor helpers -------------------------------------------------------


def test_mul_one_minus_matches_mul():
    a = geometric(1, 9)
    direct = mul_one_minus(a, 1, 2)
    generic = mul(a, from_terms([(0, 1), (2, -1)], 9))
    ok, _ = equal_to_order(direct, generic, generic.prec - 1)
    assert ok
    assert direct.prec == 9  # exact binomial factors never shrink the window


def test_div_one_minus_round_trips():
    a = from_terms([(0, 1), (3, 5)], 12)
    assert mul_one_minus(div_one_minus(a, 1, 4), 1, 4) == a
    assert div_one_minus(mul_one_minus(a, -2, 3), -2, 3) == a


def test_one_minus_helpers_handle_k_zero_and_negative():
    a = one(6)
    assert coeff(mul_one_minus(a, 3, 0), 0) == -2       # (1 - 3) = -2
    with pytest.raises(NotInvertibleError):
        div_one_minus(a, 1, 0)                          # 1/(1-1)
    s = mul_one_minus(a, 1, -2)                         # 1 - q^{-2}
    assert s.lo == -2
    assert coeff(s, -2) == -1 and coeff(s, 0) == 1
    back = div_one_minus(s, 1, -2)
    ok, _ = equal_to_order(back, one(back.prec), back.prec - 1)
    assert ok


def test_truncate_and_pad():
    s = geometric(1, 10)
    assert s.truncate(4) == geometric(1, 4)
    assert s.truncate(15) == s
    p = from_terms([(0, 1), (1, 2)], 3).pad_exact(7)
    assert p.prec == 7 and coeff(p, 5) == 0
    e = monomial(1, 4, 6).truncate(2)
    assert e.lo == e.prec  # nothing known below the monomial's exponent


# -- randomized properties ---------------------------------------------------------


def rand_series(rng, invertible=False):
    lo = rng.randint(-3, 3)
    width = rng.randint(1, 8)
    coeffs = [F(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(width)]
    if invertible and not any(coeffs):
        coeffs[0] = F(1)
    return QSeries(lo, lo + width, coeffs)


def test_ring_axioms_randomized():
    rng = random.Random(0x5eed)
    for _ in range(300):
        a, b, c = (rand_series(rng) for _ in range(3))
        assert add(a, b) == add(b, a)
        assert add(add(a, b), c) == add(a, add(b, c))
        assert mul(a, b) == mul(b, a)
        assert mul(mul(a, b), c) == mul(a, mul(b, c))
        assert mul(a, add(b, c)) == add(mul(a, b), mul(a, c))


def test_invert_roundtrip_randomized():
    rng = random.Random(0xbead)
    for _ in range(200):
        a = rand_series(rng, invertible=True)
        prod = mul(a, invert(a))
        # leading stored zeros can push the product window below q^0; every
        # coefficient the window does show must still agree with the unit
        unit = from_terms([(0, 1)] if prod.prec >= 1 else [], prod.prec)
        ok, mismatch = equal_to_order(prod, unit, prod.prec - 1)
        assert ok, mismatch


def test_precision_contract_rederive_and_truncate():
    rng = random.Random(21)
    assert invert(from_terms([(0, 1), (1, -1)], 30)).truncate(10) == \
        invert(from_terms([(0, 1), (1, -1)], 10))
    assert geometric(3, 40).truncate(11) == geometric(3, 11)
    for _ in range(50):
        lo = rng.randint(-2, 2)
        width = rng.randint(1, 6)
        coeffs = [F(rng.randint(-3, 3)) for _ in range(width)]
        narrow = QSeries(lo, lo + width, coeffs)
        wide = QSeries(lo, lo + width + 7, coeffs + [F(rng.randint(-3, 3))
                                                     for _ in range(7)])
        g = rng.choice([1, -1, 2])
        k = rng.randint(1, 4)
        assert mul_one_minus(wide, g, k).truncate(narrow.prec) == \
            mul_one_minus(narrow, g, k)
        assert div_one_minus(wide, g, k).truncate(narrow.prec) == \
            div_one_minus(narrow, g, k)


def test_integer_pipelines_stay_integral():
    s = one(40)
    for k in (1, 2, 3, 5):
        s = div_one_minus(s, 1, k)
    for k in (1, 4):
        s = mul_one_minus(s, -1, k)
    s = mul_one_minus(s, 2, 6)
    assert all(c.denominator == 1 for c in s.coeffs)
