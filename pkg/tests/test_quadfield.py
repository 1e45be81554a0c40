from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fibsums import (
    ALPHA,
    BETA,
    ONE,
    SQRT5,
    ZERO,
    NonInvertibleError,
    QuadNum,
    alpha_pow,
    beta_pow,
    fib,
    lucas,
    root5_parts,
)

from oracles import naive_fib, naive_lucas

rationals = st.fractions(max_denominator=8, min_value=-6, max_value=6)
quads = st.builds(QuadNum, rationals, rationals)


class TestRingStructure:
    def test_defining_relations(self):
        assert ALPHA * ALPHA == ALPHA + ONE
        assert ALPHA * BETA == QuadNum(-1, 0)
        assert ALPHA + BETA == ONE
        assert SQRT5 * SQRT5 == QuadNum(5, 0)
        assert SQRT5 == ALPHA - BETA

    @settings(deadline=None, max_examples=80)
    @given(a=quads, b=quads, c=quads)
    def test_ring_axioms(self, a, b, c):
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a * b == b * a
        assert a + (-a) == ZERO
        assert a * ONE == a

    @settings(deadline=None, max_examples=80)
    @given(a=quads, b=quads)
    def test_conjugation_is_an_automorphism(self, a, b):
        assert (a * b).conj() == a.conj() * b.conj()
        assert (a + b).conj() == a.conj() + b.conj()
        assert a.conj().conj() == a

    def test_conj_spot_values(self):
        assert ALPHA.conj() == BETA
        assert QuadNum(5, 0).conj() == QuadNum(5, 0)
        assert (ALPHA**5).conj() == QuadNum(8, -5)  # beta^5 expanded by hand

    @settings(deadline=None, max_examples=60)
    @given(a=quads)
    def test_inverse(self, a):
        if a == ZERO:
            with pytest.raises(NonInvertibleError):
                a.inv()
        else:
            assert a * a.inv() == ONE

    def test_inverse_spot_values(self):
        assert ALPHA.inv() == QuadNum(-1, 1)
        assert QuadNum(2, 0).inv() == QuadNum(Fraction(1, 2), 0)
        with pytest.raises(NonInvertibleError):
            ZERO.inv()

    def test_pow_zero_is_one_even_for_zero(self):
        assert ZERO**0 == ONE
        assert ALPHA**0 == ONE

    def test_negative_pow(self):
        assert ALPHA**-1 == QuadNum(-1, 1)
        assert (ALPHA**-7) * (ALPHA**7) == ONE
        with pytest.raises(NonInvertibleError):
            ZERO**-1


class TestAlphaPowers:
    @pytest.mark.parametrize("n,expected", [(5, (3, 5)), (0, (1, 0)), (-1, (-1, 1))])
    def test_spot_values(self, n, expected):
        assert alpha_pow(n) == QuadNum(*expected)

    def test_coordinates_are_fibonacci(self):
        for n in range(-200, 201):
            assert alpha_pow(n) == QuadNum(fib(n - 1), fib(n)), n

    def test_binet_reconstruction(self):
        for n in range(-200, 201):
            an = alpha_pow(n)
            bn = an.conj()
            diff = an - bn
            ratio = diff * SQRT5.inv()
            assert ratio.is_rational and ratio.u == naive_fib(n)
            total = an + bn
            assert total.is_rational and total.u == naive_lucas(n)

    def test_root5_parts(self):
        assert root5_parts(ALPHA) == (Fraction(1, 2), Fraction(1, 2))
        assert root5_parts(QuadNum(7, 0)) == (7, 0)
        assert root5_parts(2 * alpha_pow(4)) == (7, 3)  # (L_4, F_4)
        for t in range(-200, 201):
            assert root5_parts(2 * alpha_pow(t)) == (lucas(t), fib(t))


def in_range(lo, hi):
    return range(lo, hi + 1)


class TestIndexShiftIdentities:
    # L[p+q] - L[p] a^q = -b^p F[q] sqrt5, and companions, as exact ring equations.

    def test_all_four(self):
        for p in in_range(-12, 12):
            for q in in_range(-12, 12):
                ap, bp = alpha_pow(p), beta_pow(p)
                aq, bq = alpha_pow(q), beta_pow(q)
                Fq, Lpq, Lp = fib(q), lucas(p + q), lucas(p)
                Fpq, Fp = fib(p + q), fib(p)
                assert QuadNum(Lpq, 0) - Lp * aq == -(bp * Fq) * SQRT5
                assert QuadNum(Lpq, 0) - Lp * bq == (ap * Fq) * SQRT5
                assert QuadNum(Fpq, 0) - Fp * aq == bp * Fq
                assert QuadNum(Fpq, 0) - Fp * bq == ap * Fq


class TestParitySplitIdentities:
    # 1 +/- (-1)^p a^(2q) collapses to a^q times L[q] or F[q] sqrt5 by parity.

    def test_both_signs(self):
        for p in in_range(-12, 12):
            for q in in_range(-12, 12):
                sp = -1 if p % 2 else 1
                aq = alpha_pow(q)
                plus = ONE + sp * alpha_pow(2 * q)
                minus = ONE - sp * alpha_pow(2 * q)
                if (p - q) % 2:  # different parity
                    assert plus == sp * aq * fib(q) * SQRT5
                    assert minus == -sp * aq * lucas(q)
                else:
                    assert plus == sp * aq * lucas(q)
                    assert minus == -sp * aq * fib(q) * SQRT5

    def test_corollaries(self):
        for q in in_range(-12, 12):
            sq = QuadNum(-1 if q % 2 else 1, 0)
            aq, bq = alpha_pow(q), beta_pow(q)
            assert sq + alpha_pow(2 * q) == aq * lucas(q)
            assert sq - alpha_pow(2 * q) == -(aq * fib(q)) * SQRT5
            assert sq + beta_pow(2 * q) == bq * lucas(q)
            assert sq - beta_pow(2 * q) == (bq * fib(q)) * SQRT5
