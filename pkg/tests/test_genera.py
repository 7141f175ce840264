from fractions import Fraction

import pytest

from symgen import (
    MINUS_Y,
    ConventionError,
    FermionicShift,
    GenusSeriesRequest,
    GuardError,
    HodgeDiamond,
    YPolynomial,
    chihat_orb_delocalized,
    chihat_orb_series,
    chihat_sym_series,
    chiy_orb_delocalized,
    chiy_orb_series,
    chiy_sym_series,
    euler_orb_bruteforce,
    euler_orb_classsum,
    euler_orb_series,
    euler_sym_series,
    genus_series,
)
from symgen.partitions import CycleType

from conftest import all_small_diamonds, count_partitions

Y = YPolynomial.y_power
U = YPolynomial.u_power


def constants(series):
    return [c.constant_term() for c in series.coeffs]


class TestEulerSeries:
    def test_sym_line(self):
        series = euler_sym_series(2, 2)
        assert constants(series) == [1, 2, 3]
        # the q^2 coefficient is the Euler number of the symmetric square
        square = HodgeDiamond.p1().to_superspace().super_symmetric_power(2)
        assert square.euler_number() == 3

    def test_sym_zero_chi(self):
        assert constants(euler_sym_series(0, 4)) == [1, 0, 0, 0, 0]

    def test_sym_negative_chi_matches_exp_oracle(self):
        from symgen import QSeries

        arg = QSeries.zero(2)
        for l in (1, 2):
            arg = arg + QSeries.term(Fraction(-4, l), l, 2)
        assert constants(euler_sym_series(-4, 2)) == constants(arg.exp()) == [1, -4, 6]

    def test_orb_line(self):
        assert constants(euler_orb_series(2, 3)) == [1, 2, 5, 10]

    def test_orb_partition_numbers(self):
        series = euler_orb_series(1, 5)
        assert constants(series) == [count_partitions(n) for n in range(6)]

    def test_orb_zero_chi(self):
        assert constants(euler_orb_series(0, 4)) == [1, 0, 0, 0, 0]


class TestEulerBruteForce:
    def test_line_n2_by_hand(self, p1):
        # pairs of S_2: (e,e) -> chi^2, the other three -> chi
        assert euler_orb_bruteforce(p1, 2) == (4 + 2 + 2 + 2) // 2 == 5

    def test_n1_is_chi(self):
        for diamond in (HodgeDiamond.p1(), HodgeDiamond.elliptic_curve()):
            assert euler_orb_bruteforce(diamond, 1) == diamond.euler_number()

    def test_line_n3_cross_oracle(self, p1):
        assert euler_orb_bruteforce(p1, 3) == euler_orb_series(2, 3).coefficient(3).constant_term() == 10

    def test_triple_agreement(self):
        for diamond in (HodgeDiamond.p1(), HodgeDiamond.elliptic_curve(), HodgeDiamond.projective_space(2)):
            chi = diamond.euler_number()
            series = euler_orb_series(chi, 4)
            for n in range(1, 5):
                brute = euler_orb_bruteforce(diamond, n)
                assert brute == euler_orb_classsum(chi, n)
                assert brute == series.coefficient(n).constant_term()

    def test_guard(self, p1):
        with pytest.raises(GuardError):
            euler_orb_bruteforce(p1, 7)


class TestChiySeries:
    def test_sym_line_q2(self, p1):
        series = chiy_sym_series(p1, 3)
        assert series.coefficient(2) == Y(2) + Y(1) + 1
        assert series.coefficient(0) == YPolynomial.one()

    def test_sym_line_matches_plane(self, p1):
        plane = HodgeDiamond.projective_space(2)
        assert chiy_sym_series(p1, 2).coefficient(2) == plane.chi_minus_y()

    def test_sym_elliptic_is_constant_one(self):
        series = chiy_sym_series(HodgeDiamond.elliptic_curve(), 5)
        assert constants(series) == [1, 0, 0, 0, 0, 0]

    def test_orb_line_q2(self, p1):
        series = chiy_orb_series(p1, 2)
        assert series.coefficient(2) == YPolynomial({0: 1, 1: 1, 2: 1, 3: 1, 4: 1})

    def test_orb_q0_and_q1(self, p1):
        series = chiy_orb_series(p1, 3)
        assert series.coefficient(0) == YPolynomial.one()
        assert series.coefficient(1) == p1.chi_minus_y()

    def test_orb_half_powers_only_in_odd_dimension(self):
        surface = HodgeDiamond.p1_times_p1()
        series = chiy_orb_series(surface, 3)
        for coeff in series.coeffs:
            assert all(a % 2 == 0 for a, _ in coeff.pairs())

    def test_sym_oracle_basis_enumeration(self):
        for diamond in all_small_diamonds(max_dim=2, max_total=3):
            space = diamond.to_superspace()
            series = chiy_sym_series(diamond, 3)
            for n in range(4):
                assert series.coefficient(n) == space.super_symmetric_power(n).chi_minus_y(), (
                    diamond.rows,
                    n,
                )

    def test_specialization_to_euler(self):
        for diamond in (HodgeDiamond.p1(), HodgeDiamond.elliptic_curve(), HodgeDiamond.p1_times_p1()):
            chi = diamond.euler_number()
            assert chiy_sym_series(diamond, 6).at_y_one() == euler_sym_series(chi, 6)
            assert chiy_orb_series(diamond, 6).at_y_one() == euler_orb_series(chi, 6)

    def test_even_diamonds_have_nonnegative_integer_coefficients(self):
        import random

        rng = random.Random(9)
        for _ in range(10):
            d = rng.randint(0, 2)
            rows = [[0] * (d + 1) for _ in range(d + 1)]
            for _ in range(rng.randint(1, 4)):
                p, q = rng.randint(0, d), rng.randint(0, d)
                if (p + q) % 2 == 0:
                    rows[p][q] += 1
            diamond = HodgeDiamond(d, tuple(tuple(r) for r in rows))
            for series in (chiy_sym_series(diamond, 4), chiy_orb_series(diamond, 4)):
                for coeff in series.coeffs:
                    for _, c in coeff.pairs():
                        assert c.denominator == 1 and c >= 0

    def test_rejects_bside_diamond(self):
        with pytest.raises(ValueError, match="tagged 'hodge'"):
            chiy_sym_series(HodgeDiamond.p1_bside(), 2)


class TestDelocalized:
    def test_line_n2_class_breakdown(self, p1):
        # identity class contributes 1 + y + y^2, the transposition y^(1/2) (1 + y)
        value = chiy_orb_delocalized(p1, 2)
        identity_part = Y(2) + Y(1) + 1
        transposition_part = U(1) * (Y(1) + 1)
        assert value == identity_part + transposition_part

    def test_trivial_cases(self, p1):
        assert chiy_orb_delocalized(p1, 0) == YPolynomial.one()
        assert chiy_orb_delocalized(p1, 1) == p1.chi_minus_y()

    def test_matches_closed_form(self):
        for diamond in (HodgeDiamond.p1(), HodgeDiamond.p1_times_p1(), HodgeDiamond.elliptic_curve()):
            series = chiy_orb_series(diamond, 5)
            for n in range(6):
                assert chiy_orb_delocalized(diamond, n) == series.coefficient(n), (diamond.rows, n)

    def test_fermionic_shift(self):
        shift = FermionicShift.for_cycles(l=3, count=2, dim=1)
        assert shift.u_quanta == 4
        assert shift.weight() == Y(2)
        assert FermionicShift.for_cycle_type(CycleType(2, (0, 1)), 1).u_quanta == 1

    def test_minus_y_convention_rejects_half_integer_shift(self, p1):
        with pytest.raises(ConventionError, match="half-integer shift"):
            chiy_orb_delocalized(p1, 2, convention=MINUS_Y)

    def test_minus_y_convention_on_even_dimension(self):
        surface = HodgeDiamond.p1_times_p1()
        plus = chiy_orb_delocalized(surface, 2)
        minus = chiy_orb_delocalized(surface, 2, convention=MINUS_Y)
        # the transposition class carries integral shift y^1 and flips sign
        sym_q1 = chiy_sym_series(surface, 1).coefficient(1)
        assert plus - minus == 2 * Y(1) * sym_q1

    def test_guard(self, p1):
        with pytest.raises(GuardError):
            chiy_orb_delocalized(p1, 13)


class TestChihat:
    def test_sym_line_q2(self):
        series = chihat_sym_series(HodgeDiamond.p1_bside(), 2)
        # ((1 - 3y)^2 + (1 - 3y^2)) / 2
        assert series.coefficient(2) == YPolynomial({0: 1, 2: -3, 4: 3})

    def test_point_bside_gives_all_ones(self):
        point = HodgeDiamond(0, ((1,),), theory="b-side")
        assert constants(chihat_sym_series(point, 4)) == [1, 1, 1, 1, 1]

    def test_q0(self):
        assert chihat_sym_series(HodgeDiamond.p1_bside(), 3).coefficient(0) == YPolynomial.one()

    def test_orb_matches_delocalized(self):
        diamond = HodgeDiamond.p1_bside()
        series = chihat_orb_series(diamond, 4)
        for n in range(5):
            assert chihat_orb_delocalized(diamond, n) == series.coefficient(n)

    def test_rejects_hodge_diamond(self, p1):
        with pytest.raises(ValueError, match="tagged 'b-side'"):
            chihat_sym_series(p1, 2)
        with pytest.raises(ValueError, match="tagged 'b-side'"):
            chihat_orb_series(p1, 2)


class TestGenusSeriesRequest:
    def test_dispatch(self, p1):
        request = GenusSeriesRequest(p1, 3, "chiy-sym")
        assert genus_series(request) == chiy_sym_series(p1, 3)
        euler = GenusSeriesRequest(p1, 3, "euler-orb")
        assert constants(genus_series(euler)) == [1, 2, 5, 10]

    def test_validation(self, p1):
        with pytest.raises(ValueError):
            GenusSeriesRequest(p1, -1, "chiy-sym")
        with pytest.raises(ValueError):
            GenusSeriesRequest(p1, 2, "mystery-flavor")
