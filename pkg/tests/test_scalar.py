import math
from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, strategies as st

from semicox.scalar import ConductorError, CycField, conductor_for

FIELDS = [CycField(N) for N in (2, 4, 5, 6, 8, 12)]


def cyc_elements(F):
    """Random rational combinations of cos(k pi / N)."""
    coeff = st.fractions(min_value=-5, max_value=5, max_denominator=6)
    return st.dictionaries(st.integers(0, F.N - 1), coeff, max_size=4).map(
        lambda d: sum((F.cos_k(k) * q for k, q in d.items()), F.zero())
    )


def reference_value(x):
    with mpmath.workprec(200):
        return sum(
            mpmath.mpf(q.numerator) / q.denominator * mpmath.cos(k * mpmath.pi / x.field.N)
            for k, q in x.cos_coords().items()
        )


def test_cos_pi_over_small_values():
    F = CycField(4)
    assert F.cos_pi_over(2) == 0
    assert F.cos_pi_over(3) == Fraction(1, 2)
    c = F.cos_pi_over(4)
    assert not c.is_rational()
    assert c * c == Fraction(1, 2)
    assert F.cos_pi_over(math.inf) == 1


def test_cos_pi_over_rejects_foreign_m():
    with pytest.raises(ConductorError):
        CycField(4).cos_pi_over(5)


def test_conductor_skips_rational_and_infinite_labels():
    assert conductor_for([2, 3, math.inf]) == 2
    assert conductor_for([4, 3, 6]) == 12
    assert conductor_for([5, 2]) == 5


@pytest.mark.parametrize("N", [5, 7, 8, 9, 12, 20])
def test_every_basis_cosine_matches_floating_value(N):
    F = CycField(N)
    for k in range(2 * N):
        assert abs(float(F.cos_k(k)) - math.cos(k * math.pi / N)) < 1e-12


def test_sign_examples():
    F = CycField(4)
    assert F.zero().sign() == 0
    assert (F.cos_pi_over(4) - Fraction(1, 2)).sign() == 1
    assert (Fraction(1, 2) - F.cos_pi_over(3)).sign() == 0


def test_sign_of_tiny_nonzero_value_needs_intervals():
    # (2cos(pi/12))^2 - (2 + sqrt 3) vanishes; shift by 10^-30 to stay nonzero
    F = CycField(12)
    c = F.gen()
    root3 = F.cos_k(2) * 2
    eps = Fraction(1, 10**30)
    assert (c * c - 2 - root3).sign() == 0
    assert (c * c - 2 - root3 + eps).sign() == 1
    assert (c * c - 2 - root3 - eps).sign() == -1


def test_recognize_cos_examples():
    F = CycField(60)
    assert F.recognize_cos(F.rational(Fraction(1, 2))) == 3
    assert F.recognize_cos(F.zero()) == 2
    assert F.recognize_cos(F.rational(Fraction(3, 4))) is None


def test_three_quarters_is_no_cosine_for_small_conductors():
    # brute force oracle: compare against every cos(pi/m) numerically
    for m in range(2, 200):
        assert abs(math.cos(math.pi / m) - 0.75) > 1e-6
    for N in range(2, 61):
        assert CycField(N).recognize_cos(CycField(N).rational(Fraction(3, 4))) is None


def test_in_cos_set_examples():
    assert CycField(2).in_cos_set(CycField(2).one())
    F5 = CycField(5)
    assert F5.in_cos_set(F5.cos_pi_over(5))
    assert not F5.in_cos_set(F5.rational(Fraction(-1, 2)))
    assert F5.in_cos_set(F5.rational(Fraction(7, 3)))


@pytest.mark.parametrize("N", [2, 4, 5, 6, 8, 10, 12, 30])
def test_recognize_inverts_cos_pi_over(N):
    F = CycField(N)
    for m in F.cos_candidates():
        assert F.recognize_cos(F.cos_pi_over(m)) == m


@pytest.mark.parametrize("F", FIELDS, ids=lambda F: f"N={F.N}")
def test_ring_axioms(F):
    @given(cyc_elements(F), cyc_elements(F), cyc_elements(F))
    def check(a, b, c):
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a * b == b * a
        assert a - a == F.zero()
        if a:
            assert a * a.inverse() == F.one()

    check()


@pytest.mark.parametrize("F", FIELDS, ids=lambda F: f"N={F.N}")
def test_sign_agrees_with_high_precision_value(F):
    @given(cyc_elements(F))
    def check(x):
        ref = reference_value(x)
        if x.is_zero():
            assert x.sign() == 0
        else:
            assert abs(ref) > 1e-40
            assert x.sign() == (1 if ref > 0 else -1)
            assert abs(float(x) - float(ref)) < 1e-9

    check()


@pytest.mark.parametrize("F", FIELDS, ids=lambda F: f"N={F.N}")
def test_cos_coords_round_trip(F):
    @given(cyc_elements(F))
    def check(x):
        assert type(x).from_cos_coords(F, x.cos_coords()) == x

    check()


def test_product_to_sum_identity():
    F = CycField(12)
    for a in range(12):
        for b in range(12):
            assert F.cos_k(a) * F.cos_k(b) == (F.cos_k(a + b) + F.cos_k(a - b)) / 2


def test_rationals_compare_across_fields():
    assert CycField(4).rational(Fraction(1, 3)) == CycField(5).rational(Fraction(1, 3))
