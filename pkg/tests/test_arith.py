import math
import random
from fractions import Fraction

import pytest

from ktgw.arith import (
    aut_weight_sum,
    aut_weight_sum_closed,
    cesaro_check,
    class_divisibility,
    count_sublattices_hnf,
    divisors,
    hnf_matrices,
    sigma,
)


class TestDivisors:
    def test_examples(self):
        assert divisors(1) == (1,)
        assert divisors(6) == (1, 2, 3, 6)
        assert divisors(12) == (1, 2, 3, 4, 6, 12)

    def test_strictly_increasing_and_complete(self):
        for n in range(1, 300):
            divs = divisors(n)
            assert list(divs) == sorted(set(divs))
            assert divs == tuple(d for d in range(1, n + 1) if n % d == 0)

    @pytest.mark.parametrize("bad", [0, -1, -12])
    def test_rejects_nonpositive(self, bad):
        with pytest.raises(ValueError):
            divisors(bad)


class TestSigma:
    def test_examples(self):
        assert sigma(1, 6) == 12
        assert sigma(2, 2) == 5
        assert sigma(0, 1) == 1

    def test_rejects_bad_input(self):
        with pytest.raises(ValueError):
            sigma(1, 0)
        with pytest.raises(ValueError):
            sigma(3, 5)

    def test_multiplicative_on_coprime_pairs(self):
        rng = random.Random(7)
        for k in (0, 1, 2):
            done = 0
            while done < 60:
                a, b = rng.randint(1, 80), rng.randint(1, 80)
                if math.gcd(a, b) != 1:
                    continue
                assert sigma(k, a * b) == sigma(k, a) * sigma(k, b)
                done += 1


class TestSublatticeCount:
    def test_examples(self):
        assert count_sublattices_hnf(1) == 1
        assert count_sublattices_hnf(6) == 12
        assert count_sublattices_hnf(4) == 7

    def test_matrices_are_hermite_of_right_index(self):
        for ell in (1, 4, 6, 9, 12, 30):
            mats = list(hnf_matrices(ell))
            assert len(set(mats)) == len(mats)
            for (d, b), (c, q) in mats:
                assert c == 0 and 0 <= b < d
                assert d * q == ell

    def test_matches_sigma1(self):
        for ell in range(1, 201):
            assert count_sublattices_hnf(ell) == sigma(1, ell)

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            count_sublattices_hnf(0)


class TestClassDivisibility:
    def test_unimodular_block(self):
        assert class_divisibility([[1, 0], [0, 1], [0, 0], [0, 0]]) == 1

    def test_single_minor(self):
        assert class_divisibility([[2, 0], [0, 2], [0, 0], [0, 0]]) == 4

    def test_gcd_of_six_minors(self):
        # Minors: 6, 0, 12, -12, 0, 24 with gcd 6.
        assert class_divisibility([[2, 0], [0, 3], [4, 0], [0, 6]]) == 6

    def test_all_minors_vanish(self):
        assert class_divisibility([[1, 2], [2, 4], [3, 6]]) == 0
        assert class_divisibility([[0, 0], [0, 0]]) == 0

    def test_shape_checks(self):
        with pytest.raises(ValueError):
            class_divisibility([[1, 0]])
        with pytest.raises(ValueError):
            class_divisibility([[1, 0, 0], [0, 1, 0]])


def _naive_weight_sum(m: int, n: int) -> Fraction:
    g = math.gcd(m, n)
    total = Fraction(0)
    for d in divisors(g):
        for k in range(1, d + 1):
            for ell in range(1, abs(m) // d + 1):
                total += Fraction(1, math.gcd(g, (m * k + n * ell) // d))
    return total


class TestWeightSum:
    def test_examples(self):
        assert aut_weight_sum(1, 1) == 1
        assert aut_weight_sum(2, 2) == Fraction(5, 2)
        assert aut_weight_sum(2, 0) == Fraction(5, 2)

    def test_closed_form_examples(self):
        assert aut_weight_sum_closed(2, 2) == Fraction(5, 2)
        assert aut_weight_sum_closed(1, 1) == 1
        assert aut_weight_sum_closed(6, 4) == Fraction(15, 2)

    def test_matches_naive_summation(self):
        for m in range(1, 13):
            for n in range(0, 13):
                assert aut_weight_sum(m, n) == _naive_weight_sum(m, n)

    def test_identity_sweep(self):
        for m in range(1, 61):
            for n in range(0, 61):
                assert aut_weight_sum(m, n) == aut_weight_sum_closed(m, n)

    def test_sign_symmetry(self):
        rng = random.Random(11)
        for _ in range(120):
            m = rng.choice([v for v in range(-50, 51) if v])
            n = rng.randint(-50, 50)
            base = aut_weight_sum(m, n)
            assert aut_weight_sum(-m, n) == base
            assert aut_weight_sum(m, -n) == base

    def test_rejects_zero_m(self):
        with pytest.raises(ValueError):
            aut_weight_sum(0, 3)
        with pytest.raises(ValueError):
            aut_weight_sum_closed(0, 3)


class TestCesaro:
    def test_examples(self):
        assert cesaro_check(lambda v: v, 4) == (12, 12, True)
        assert cesaro_check(lambda v: v, 1) == (1, 1, True)
        assert cesaro_check(lambda v: v * v, 6) == (72, 72, True)

    def test_sweep_three_functions(self):
        funcs = (lambda v: 1, lambda v: v, lambda v: v * v)
        for f in funcs:
            for n in range(1, 401):
                assert cesaro_check(f, n).equal

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            cesaro_check(lambda v: v, 0)
