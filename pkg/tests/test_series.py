from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from pinched_veronese import (
    Multidegree,
    PinchConfig,
    Polynomial,
    RationalFunction,
    UncertifiedTableError,
    canonical_partner,
    canonical_series_check,
    enumerate_degree,
    graded_betti,
    h_polynomial,
    hilbert_closed,
    k_polynomial_check,
    veronese_module_series,
)


def cfg(n, d, m):
    return PinchConfig(n, d, Multidegree(m))


def comb0(n, k):
    return comb(n, k) if 0 <= k <= n else 0


def one_minus_zd(d):
    return Polynomial.one() - Polynomial.monomial(d)


# -- polynomial / rational arithmetic ----------------------------------------


def test_polynomial_basics():
    p = Polynomial((1, 0, -2))
    q = Polynomial((0, 1))
    assert (p + q).coeffs == (1, 1, -2)
    assert (p * q).coeffs == (0, 1, 0, -2)
    assert (-p).coeffs == (-1, 0, 2)
    assert p.degree == 2 and Polynomial.zero().degree == -1
    assert Polynomial((0, 0)).is_zero
    assert p(2) == 1 - 8
    assert Polynomial.monomial(3, 5).coeffs == (0, 0, 0, 5)
    assert p.derivative().coeffs == (0, -4)


def test_polynomial_division_and_gcd():
    a = Polynomial((1, 2, 1))  # (1+z)^2
    b = Polynomial((1, 1))
    q, r = divmod(a, b)
    assert r.is_zero and q == b
    assert a.divexact(b) == b
    with pytest.raises(ArithmeticError):
        Polynomial((1, 1, 1)).divexact(b)


def test_rational_function_normalization():
    f = RationalFunction(Polynomial((2, 2)), Polynomial((4, 0, -4)))
    # (2+2z)/(4-4z^2) = 1/(2(1-z)): constant term of the denominator is 1
    assert f.den[0] == 1
    assert f == RationalFunction(Polynomial((Fraction(1, 2),)), Polynomial((1, -1)))
    with pytest.raises(ZeroDivisionError):
        RationalFunction(Polynomial.one(), Polynomial.zero())


def test_rational_series_expansion():
    geom = RationalFunction(Polynomial.one(), Polynomial((1, -1)))
    assert geom.series(5) == [1, 1, 1, 1, 1, 1]
    f = RationalFunction(Polynomial.one(), one_minus_zd(1) ** 2)
    assert f.series(4) == [1, 2, 3, 4, 5]


def test_subs_inverse():
    f = RationalFunction(Polynomial.one(), Polynomial((1, -1)))  # 1/(1-z)
    g = f.subs_inverse()  # 1/(1-1/z) = -z/(1-z)
    assert g == RationalFunction(Polynomial((0, -1)), Polynomial((1, -1)))
    # involution
    assert g.subs_inverse() == f


def test_monomial_form():
    ok, e, c = RationalFunction(Polynomial.monomial(3, 2)).monomial_form()
    assert ok and e == 3 and c == 2
    ok, e, c = (RationalFunction(Polynomial.monomial(1)) /
                RationalFunction(Polynomial.monomial(4))).monomial_form()
    assert ok and e == -3 and c == 1
    ok, _, _ = RationalFunction(Polynomial((1, 1))).monomial_form()
    assert not ok


small_fracs = st.fractions(min_value=-5, max_value=5, max_denominator=7)


@given(st.lists(small_fracs, max_size=4), st.lists(small_fracs, max_size=4),
       st.lists(small_fracs, max_size=4))
@settings(max_examples=50, deadline=None)
def test_polynomial_ring_axioms(a, b, c):
    pa, pb, pc = Polynomial(a), Polynomial(b), Polynomial(c)
    assert pa * (pb + pc) == pa * pb + pa * pc
    assert (pa * pb) * pc == pa * (pb * pc)
    assert pa + pb == pb + pa


@given(st.lists(small_fracs, min_size=1, max_size=3),
       st.lists(small_fracs, min_size=1, max_size=3))
@settings(max_examples=50, deadline=None)
def test_rational_function_field_axioms(a, b):
    pa, pb = Polynomial(a), Polynomial(b)
    if pa.is_zero or pb.is_zero:
        return
    f = RationalFunction(pa, pb)
    assert f - f == RationalFunction(Polynomial.zero())
    assert f / f == RationalFunction(Polynomial.one())
    assert (f + f) == f * 2


# -- closed Hilbert series ---------------------------------------------------


def test_hilbert_closed_max_d():
    for d in range(3, 8):
        got = hilbert_closed(cfg(2, d, (d, 0)))
        num = Polynomial.one() + Polynomial.monomial(d, d - 2)
        assert got == RationalFunction(num, one_minus_zd(d) ** 2), d


def test_hilbert_closed_max_d_minus_1():
    for d in range(3, 8):
        got = hilbert_closed(cfg(2, d, (d - 1, 1)))
        num = Polynomial.one() + Polynomial.monomial(d, d - 2) + Polynomial.monomial(2 * d)
        assert got == RationalFunction(num, one_minus_zd(d) ** 2), d


def test_hilbert_closed_interior():
    for d in range(4, 8):
        got = hilbert_closed(cfg(2, d, (2, d - 2)))
        num = (Polynomial.one() + Polynomial.monomial(d, d - 2)
               + Polynomial.monomial(2 * d, 2) - Polynomial.monomial(3 * d))
        assert got == RationalFunction(num, one_minus_zd(d) ** 2), d


def test_hilbert_closed_degree_two_pinch():
    # removing (1,1) leaves the polynomial ring on the two pure squares
    got = hilbert_closed(cfg(2, 2, (1, 1)))
    assert got == RationalFunction(Polynomial.one(), one_minus_zd(2) ** 2)
    counted = hilbert_closed(cfg(3, 2, (1, 1, 0))).series(12)
    for t in range(7):
        assert counted[2 * t] == len(enumerate_degree(cfg(3, 2, (1, 1, 0)), t))


def test_hilbert_expansion_matches_counting():
    config = cfg(2, 3, (3, 0))
    coeffs = hilbert_closed(config).series(9)
    assert [coeffs[3 * t] for t in range(4)] == [1, 3, 5, 7]
    assert all(coeffs[k] == 0 for k in range(10) if k % 3)


def test_hilbert_counting_cross_check():
    for config in (cfg(2, 4, (4, 0)), cfg(2, 4, (3, 1)), cfg(2, 4, (2, 2)),
                   cfg(3, 3, (2, 1, 0)), cfg(3, 3, (1, 1, 1))):
        coeffs = hilbert_closed(config).series(8 * config.d)
        for t in range(9):
            assert coeffs[t * config.d] == len(enumerate_degree(config, t))


# -- Veronese module series --------------------------------------------------


def test_veronese_series_two_vars():
    for d in range(2, 7):
        got = veronese_module_series(2, d, 0)
        num = Polynomial.one() + Polynomial.monomial(d, d - 1)
        assert got == RationalFunction(num, one_minus_zd(d) ** 2)


def test_veronese_series_one_var():
    for d in range(2, 5):
        for k in range(d):
            got = veronese_module_series(1, d, k)
            assert got == RationalFunction(Polynomial.monomial(k), one_minus_zd(d))


def test_veronese_series_monomial_count():
    coeffs = veronese_module_series(3, 2, 1).series(11)
    for t in range(5):
        assert coeffs[1 + 2 * t] == comb(2 * t + 3, 2)
        assert coeffs[2 * t] == 0


def test_veronese_series_parameter_range():
    with pytest.raises(ValueError):
        veronese_module_series(2, 3, 3)
    with pytest.raises(ValueError):
        veronese_module_series(0, 3, 0)


def test_derivative_identity():
    # d/dz of the slice series equals n times the (n+1)-variable series
    for n in range(1, 5):
        for d in range(2, 6):
            for k in range(1, d):
                lhs = veronese_module_series(n, d, k).derivative()
                rhs = veronese_module_series(n + 1, d, k - 1) * Fraction(n)
                assert lhs == rhs, (n, d, k)


# -- h-polynomial ------------------------------------------------------------


def test_h_polynomial_gorenstein_case():
    coeffs = h_polynomial(cfg(2, 5, (4, 1))).coeffs
    assert list(coeffs) == [1, 0, -5, 5, 0, -1]


def test_h_polynomial_requires_two_vars():
    with pytest.raises(ValueError):
        h_polynomial(cfg(3, 3, (1, 1, 1)))


def test_h_polynomial_max_d_formula():
    # sign-corrected closed form: coefficient i is (-1)^(i+1) * C(d-1,i) * (i-1)
    for d in range(3, 11):
        h = h_polynomial(cfg(2, d, (d, 0)))
        assert h[0] == 1
        for i in range(0, d + 1):
            assert h[i] == (-1) ** (i + 1) * comb0(d - 1, i) * (i - 1), (d, i)


def sign(k):
    return -1 if k % 2 else 1


def test_h_polynomial_max_d_minus_1_formula():
    for d in range(3, 11):
        h = h_polynomial(cfg(2, d, (d - 1, 1)))
        for i in range(0, d + 1):
            want = Fraction(sign(i - 1) * comb0(d, i) * (i - 1) * (d - i - 1), d - 1)
            assert h[i] == want, (d, i)


def test_h_polynomial_interior_formula():
    for d in range(4, 11):
        h = h_polynomial(cfg(2, d, (2, d - 2)))
        for i in range(0, d + 1):
            want = sign(i - 1) * (
                (d - 1) * comb0(d - 2, i - 1) - comb0(d, i - 1) - comb0(d - 2, i)
            )
            assert h[i] == want, (d, i)
        # top coefficient one degree beyond the printed range
        assert h.degree == d + 1
        assert h[d + 1] == (-1) ** (d + 1)


def test_interior_formula_vanishes_at_one():
    # (d-1)*C(d-2,0) - C(d,0) - C(d-2,1) = 0 identically
    for d in range(4, 41):
        assert (d - 1) - 1 - (d - 2) == 0
        h = h_polynomial(cfg(2, d, (2, d - 2))) if d <= 10 else None
        if h is not None:
            assert h[1] == 0


# -- series identity against Betti tables ------------------------------------


def test_k_polynomial_check_true_cases():
    for config in (cfg(2, 4, (4, 0)), cfg(2, 5, (4, 1)), cfg(2, 5, (2, 3))):
        table = graded_betti(config)
        assert k_polynomial_check(table, config)


def test_k_polynomial_check_detects_mutation():
    config = cfg(2, 4, (4, 0))
    table = graded_betti(config)
    table.entries[(1, 2)] += 1
    assert not k_polynomial_check(table, config)


def test_k_polynomial_check_requires_clean_guard():
    config = cfg(2, 5, (2, 3))
    table = graded_betti(config, s_max=5)  # (3,5) is nonzero: dirty guard
    with pytest.raises(UncertifiedTableError):
        k_polynomial_check(table, config)


# -- canonical modules -------------------------------------------------------


def test_canonical_partner_examples():
    assert canonical_partner(2, 5, 1) == 2
    assert canonical_partner(3, 4, 2) == 3
    for n in (2, 3):
        for d in range(n, 7):
            assert canonical_partner(n, d, d - n) == 0
    with pytest.raises(ValueError):
        canonical_partner(2, 4, 4)


def test_canonical_partner_involution():
    for n in (1, 2, 3):
        for d in range(1, 7):
            for k in range(d):
                t = canonical_partner(n, d, k)
                assert 0 <= t < d
                assert (t + n + k) % d == 0
                assert canonical_partner(n, d, t) == k


def test_canonical_series_check_examples():
    assert canonical_series_check(1, 1, 0) == (True, 1)
    assert canonical_series_check(2, 2, 0) == (True, 2)
    holds, shift = canonical_series_check(2, 5, 1)
    assert holds and isinstance(shift, int)


def test_canonical_series_check_sweep():
    for n in (1, 2, 3):
        for d in range(1, 7):
            for k in range(d):
                holds, _ = canonical_series_check(n, d, k)
                assert holds, (n, d, k)
