import math
import random
from fractions import Fraction

import pytest

from symgen import QSeries, Rational, YPolynomial, binomial_coefficient, binomial_power

from conftest import convolve

Y = YPolynomial.y_power
U = YPolynomial.u_power


def constants(series):
    return [c.constant_term() for c in series.coeffs]


class TestYPolynomial:
    def test_rational_is_reduced_with_positive_denominator(self):
        r = Rational(6, -4)
        assert (r.numerator, r.denominator) == (-3, 2)
        assert Rational(0, 7) == 0

    def test_zero_coefficients_are_dropped(self):
        assert YPolynomial({2: 0, 0: 1}) == YPolynomial.one()
        assert YPolynomial({4: Fraction(0)}).is_zero()

    def test_y_power_stored_at_doubled_u_exponent(self):
        assert Y(3).pairs() == ((6, Fraction(1)),)
        assert U(1).pairs() == ((1, Fraction(1)),)

    def test_arithmetic(self):
        p = Y(1) + 1
        assert p * p == YPolynomial({0: 1, 2: 2, 4: 1})
        assert p - p == YPolynomial.zero()
        assert 2 * p == YPolynomial({0: 2, 2: 2})
        assert (Y(1) - 1) * (Y(1) + 1) == Y(2) - 1

    def test_pow(self):
        assert (Y(1) + 1) ** 0 == YPolynomial.one()
        assert (Y(1) + 1) ** 3 == YPolynomial({0: 1, 2: 3, 4: 3, 6: 1})

    def test_negative_exponents(self):
        p = Y(-1) + Y(2)
        assert p.coefficient(-2) == 1
        assert p.invert_y() == Y(1) + Y(-2)

    def test_substitute_y_power(self):
        assert (Y(1) + 1).substitute_y_power(2) == Y(2) + 1
        assert (U(1) + 1).substitute_y_power(3) == U(3) + 1
        p = 1 - 3 * Y(1)
        assert p.substitute_y_power(1) == p
        with pytest.raises(ValueError):
            p.substitute_y_power(0)

    def test_substitution_is_ring_homomorphism(self):
        rng = random.Random(5)
        for _ in range(25):
            p = YPolynomial({rng.randint(-3, 3): rng.randint(-4, 4) for _ in range(3)})
            q = YPolynomial({rng.randint(-3, 3): rng.randint(-4, 4) for _ in range(3)})
            l = rng.randint(1, 4)
            assert (p * q).substitute_y_power(l) == p.substitute_y_power(l) * q.substitute_y_power(l)

    def test_at_one(self):
        assert (Y(2) + 2 * Y(1) + 1).at_one() == 4

    def test_monomial_inverse(self):
        assert U(3, Fraction(2)).inverse() == U(-3, Fraction(1, 2))
        with pytest.raises(ValueError):
            (Y(1) + 1).inverse()

    def test_str(self):
        assert str(YPolynomial.zero()) == "0"
        assert str(Y(2) + Y(1) + 1) == "1 + y + y^2"
        assert str(U(1)) == "y^(1/2)"
        assert str(U(3)) == "y^(3/2)"
        assert str(1 - 3 * Y(1)) == "1 - 3*y"
        assert str(Y(-1)) == "y^-1"
        assert str(Y(1, Fraction(3, 2))) == "3/2*y"


class TestQSeries:
    def test_length_invariant(self):
        s = QSeries([1, 2], trunc=4)
        assert len(s.coeffs) == 5
        with pytest.raises(ValueError):
            QSeries([1, 2, 3], trunc=1)

    def test_mul_binomial_square(self):
        f = QSeries([1, 1], trunc=2)
        assert constants(f * f) == [1, 2, 1]

    def test_mul_identity_element(self):
        f = QSeries([YPolynomial.one(), Y(1)], trunc=3)
        product = f * QSeries.one(3)
        assert product == f

    def test_mul_geometric_telescoping(self):
        geometric = QSeries([1, 1, 1, 1], trunc=3)
        product = geometric * QSeries([1, -1], trunc=3)
        assert product == QSeries.one(3)
        # independent convolution oracle
        assert constants(product) == convolve([1, 1, 1, 1], [1, -1], 3)

    def test_operations_use_minimum_truncation(self):
        a = QSeries([1, 1], trunc=3)
        b = QSeries.one(5)
        assert (a * b).trunc == 3
        assert (a + b).trunc == 3

    def test_coefficient_guard(self):
        s = QSeries.one(2)
        with pytest.raises(ValueError):
            s.coefficient(3)

    def test_exp_of_zero(self):
        assert QSeries.zero(4).exp() == QSeries.one(4)

    def test_exp_hand_expansion(self):
        f = QSeries([0, 2, 1], trunc=2)
        assert constants(f.exp()) == [1, 2, 3]

    def test_exp_matches_binomial_form(self):
        arg = QSeries.zero(4)
        for l in range(1, 5):
            arg = arg + QSeries.term(Fraction(2, l), l, 4)
        assert constants(arg.exp()) == [1, 2, 3, 4, 5]
        assert arg.exp() == binomial_power(2, 4)

    def test_exp_rejects_constant_term(self):
        with pytest.raises(ValueError, match="q\\^0 coefficient is 1 \\+ y"):
            QSeries([Y(1) + 1], trunc=2).exp()

    def test_log_of_one(self):
        assert QSeries.one(3).log() == QSeries.zero(3)

    def test_log_exp_round_trip(self):
        f = QSeries([YPolynomial.zero(), YPolynomial.one(), Y(1)], trunc=4)
        assert f.exp().log() == f

    def test_log_mercator(self):
        geometric = binomial_power(1, 4)
        expected = [Fraction(0), Fraction(1), Fraction(1, 2), Fraction(1, 3), Fraction(1, 4)]
        assert constants(geometric.log()) == expected

    def test_log_rejects_wrong_constant(self):
        with pytest.raises(ValueError, match="constant term 1"):
            QSeries([2, 1], trunc=2).log()

    def test_log_exp_round_trip_random(self):
        rng = random.Random(11)
        for trunc in range(1, 9):
            coeffs = [YPolynomial.zero()] + [
                YPolynomial({rng.randint(-2, 2): rng.randint(-3, 3)}) for _ in range(trunc)
            ]
            f = QSeries(coeffs, trunc)
            assert f.exp().log() == f

    def test_ring_laws_random(self):
        rng = random.Random(3)

        def random_series():
            trunc = rng.randint(1, 5)
            return QSeries(
                [YPolynomial({rng.randint(-2, 2): rng.randint(-3, 3)}) for _ in range(trunc + 1)],
                trunc,
            )

        for _ in range(30):
            a, b, c = random_series(), random_series(), random_series()
            n = min(a.trunc, b.trunc, c.trunc)
            assert (a * b).truncate(n) == (b * a).truncate(n)
            assert ((a * b) * c).truncate(n) == (a * (b * c)).truncate(n)
            assert ((a + b) * c).truncate(n) == (a * c + b * c).truncate(n)

    def test_stretch(self):
        s = binomial_power(2, 6).stretch(2)
        assert constants(s) == [1, 0, 2, 0, 3, 0, 4]

    def test_term_beyond_trunc_is_zero(self):
        assert QSeries.term(1, 5, 3) == QSeries.zero(3)

    def test_str(self):
        s = QSeries([YPolynomial.one(), Y(1) + 1], trunc=1)
        assert str(s) == "q^0: 1; q^1: 1 + y"


class TestBinomialPower:
    def test_positive_exponent(self):
        assert constants(binomial_power(2, 4)) == [1, 2, 3, 4, 5]

    def test_zero_exponent(self):
        assert constants(binomial_power(0, 3)) == [1, 0, 0, 0]

    def test_k3_stress_value(self):
        assert constants(binomial_power(24, 1)) == [1, 24]

    def test_negative_exponent_matches_exp_form(self):
        # the exponential oracle: (1-q)^(-c) = exp(sum_l c q^l / l)
        for c in range(-6, 7):
            for trunc in range(0, 9):
                arg = QSeries.zero(trunc)
                for l in range(1, trunc + 1):
                    arg = arg + QSeries.term(Fraction(c, l), l, trunc)
                assert binomial_power(c, trunc) == arg.exp(), (c, trunc)

    def test_negative_exponent_values(self):
        assert constants(binomial_power(-4, 2)) == [1, -4, 6]

    def test_coefficient_against_comb(self):
        for c in range(1, 7):
            for n in range(0, 9):
                assert binomial_coefficient(c, n) == math.comb(n + c - 1, n)
        assert binomial_coefficient(-3, 2) == 3
        assert binomial_coefficient(-3, 4) == 0
