from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fibsums import SequenceKind, binomial, direct_sum, fib, lucas

from oracles import naive_binomial, naive_fib, naive_lucas, naive_weighted_sum

F, L = SequenceKind.FIB, SequenceKind.LUCAS


class TestFib:
    @pytest.mark.parametrize(
        "n,expected",
        [(0, 0), (1, 1), (10, 55), (-7, 13), (-8, -21), (2, 1), (-1, 1), (-2, -1)],
    )
    def test_spot_values(self, n, expected):
        assert fib(n) == expected

    def test_matches_naive_iteration(self):
        for n in range(-300, 301):
            assert fib(n) == naive_fib(n), n

    def test_cassini(self):
        for n in range(-200, 201):
            assert fib(n + 1) * fib(n - 1) - fib(n) ** 2 == (-1 if n % 2 else 1)

    def test_large_index_digit_count(self):
        # F_1000 is a well-known 209-digit number
        assert len(str(fib(1000))) == 209


class TestLucas:
    @pytest.mark.parametrize("n,expected", [(0, 2), (1, 1), (6, 18), (-3, -4), (-4, 7)])
    def test_spot_values(self, n, expected):
        assert lucas(n) == expected

    def test_matches_naive_iteration(self):
        for n in range(-300, 301):
            assert lucas(n) == naive_lucas(n), n

    def test_fibonacci_neighbour_sum(self):
        for n in range(-200, 201):
            assert lucas(n) == fib(n - 1) + fib(n + 1)


class TestBinomial:
    @pytest.mark.parametrize("n,k,expected", [(5, 2, 10), (7, 0, 1), (4, 7, 0), (4, -1, 0)])
    def test_spot_values(self, n, k, expected):
        assert binomial(n, k) == expected

    def test_rejects_negative_n(self):
        with pytest.raises(ValueError):
            binomial(-1, 0)

    def test_matches_pascal(self):
        for n in range(15):
            for k in range(-2, n + 3):
                assert binomial(n, k) == naive_binomial(n, k)

    def test_row_sums(self):
        for n in range(65):
            assert sum(binomial(n, k) for k in range(n + 1)) == 2**n


class TestDirectSum:
    @pytest.mark.parametrize(
        "args,expected",
        [
            ((3, 1, 1, 1, 1, 0, 1, L), 18),  # L_0 + 3L_1 + 3L_2 + L_3
            ((2, 1, 1, 1, 1, 1, 3, F), 11),  # F_1^3 + 2F_2^3 + F_3^3
            ((2, 1, -1, 1, 2, 0, 2, F), 7),  # F_0^2 - 2F_2^2 + F_4^2
            ((5, 1, 1, 1, 1, 0, 0, F), 32),  # sum C(5,k) = 2^5
        ],
    )
    def test_spot_values(self, args, expected):
        assert direct_sum(*args) == expected

    def test_rejects_negative_n_or_m(self):
        with pytest.raises(ValueError):
            direct_sum(-1, 1, 1, 1, 1, 0, 1, F)
        with pytest.raises(ValueError):
            direct_sum(2, 1, 1, 1, 1, 0, -1, F)

    def test_zero_weight_conventions(self):
        # 0^0 = 1 for the weights: only the k=n (resp. k=0) term survives
        assert direct_sum(3, 0, 1, 1, 1, 0, 1, F) == fib(3)
        assert direct_sum(3, 1, 0, 1, 1, 2, 1, L) == lucas(2)
        # W = 0 with m = 0 contributes 1, not 0
        assert direct_sum(0, 1, 1, 1, 1, 0, 0, F) == 1

    @pytest.mark.parametrize("kind", [F, L])
    def test_m_zero_is_binomial_theorem(self, kind):
        for n in range(9):
            for x, z in [(1, 1), (2, -1), (Fraction(1, 2), Fraction(3, 2)), (-2, 3)]:
                assert direct_sum(n, x, z, 3, 2, 1, 0, kind) == Fraction(x + z) ** n

    @settings(deadline=None, max_examples=60)
    @given(
        n=st.integers(0, 6),
        x=st.fractions(max_denominator=6, min_value=-4, max_value=4),
        z=st.fractions(max_denominator=6, min_value=-4, max_value=4),
        j=st.integers(-3, 3),
        r=st.integers(-3, 3),
        s=st.integers(-3, 3),
        m=st.integers(0, 3),
        fibonacci=st.booleans(),
    )
    def test_matches_naive_summation(self, n, x, z, j, r, s, m, fibonacci):
        kind = F if fibonacci else L
        assert direct_sum(n, x, z, j, r, s, m, kind) == naive_weighted_sum(
            n, x, z, j, r, s, m, fibonacci
        )

    def test_rational_weights_exact(self):
        got = direct_sum(2, Fraction(1, 2), Fraction(1, 3), 1, 1, 0, 1, F)
        # C(2,0)(1/2)^2 F_0 + C(2,1)(1/2)(1/3) F_1 + C(2,2)(1/3)^2 F_2
        assert got == Fraction(1, 3) + Fraction(1, 9)
