from fractions import Fraction

import pytest

from symgen import (
    BidegreePolynomial,
    BigradedSuperSpace,
    GuardError,
    HodgeDiamond,
    YPolynomial,
    molien_average,
    molien_trace,
)
from symgen.partitions import CycleType, partitions_of

from conftest import all_small_diamonds

Y = YPolynomial.y_power


class TestHodgeDiamond:
    def test_validation(self):
        with pytest.raises(ValueError):
            HodgeDiamond(1, ((1, 0),))
        with pytest.raises(ValueError):
            HodgeDiamond(1, ((1, -1), (0, 1)))
        with pytest.raises(ValueError):
            HodgeDiamond(0, ((1,),), theory="mystery")

    def test_chi_minus_y_p1(self):
        assert HodgeDiamond.p1().chi_minus_y() == Y(1) + 1

    def test_chi_minus_y_point(self):
        assert HodgeDiamond.point().chi_minus_y() == YPolynomial.one()

    def test_chi_minus_y_elliptic_curve_vanishes(self):
        assert HodgeDiamond.elliptic_curve().chi_minus_y().is_zero()

    def test_chi_minus_y_bside_line(self):
        assert HodgeDiamond.p1_bside().chi_minus_y() == 1 - 3 * Y(1)

    def test_euler_numbers(self):
        assert HodgeDiamond.p1().euler_number() == 2
        assert HodgeDiamond.elliptic_curve().euler_number() == 0
        assert HodgeDiamond.projective_space(2).euler_number() == 3

    def test_euler_equals_chi_at_y_one(self):
        for diamond in (HodgeDiamond.p1(), HodgeDiamond.elliptic_curve(), HodgeDiamond.p1_times_p1()):
            assert diamond.chi_minus_y().at_one() == diamond.euler_number()

    def test_serre_symmetry_flag(self):
        assert HodgeDiamond.p1().serre_symmetric()
        assert not HodgeDiamond(1, ((1, 0), (0, 2))).serre_symmetric()

    def test_serre_functional_equation(self):
        # for Serre-symmetric diamonds, chi_{-y}(X) = y^d chi_{-1/y}(X)
        for diamond in (
            HodgeDiamond.p1(),
            HodgeDiamond.elliptic_curve(),
            HodgeDiamond.projective_space(2),
            HodgeDiamond.p1_times_p1(),
            HodgeDiamond(2, ((1, 0, 1), (0, 20, 0), (1, 0, 1))),
        ):
            chi = diamond.chi_minus_y()
            assert chi == Y(diamond.dim) * chi.invert_y()


class TestSuperSymmetricPower:
    def test_square_of_line_cohomology_is_plane(self):
        space = HodgeDiamond.p1().to_superspace()
        square = space.super_symmetric_power(2)
        assert square == HodgeDiamond.projective_space(2).to_superspace()

    def test_odd_square_vanishes(self):
        odd = BigradedSuperSpace({(1, 0): 1})
        assert odd.super_symmetric_power(2).total_dimension() == 0

    def test_zeroth_power_is_a_point(self):
        space = HodgeDiamond.elliptic_curve().to_superspace()
        assert space.super_symmetric_power(0) == BigradedSuperSpace({(0, 0): 1})

    def test_first_power_is_identity(self):
        for diamond in (HodgeDiamond.p1(), HodgeDiamond.elliptic_curve()):
            space = diamond.to_superspace()
            assert space.super_symmetric_power(1) == space

    def test_mixed_parities(self):
        # one even and one odd generator: the odd one can appear at most once
        space = BigradedSuperSpace({(0, 0): 1, (1, 0): 1})
        square = space.super_symmetric_power(2)
        assert square == BigradedSuperSpace({(0, 0): 1, (1, 0): 1})

    def test_guard(self, monkeypatch):
        monkeypatch.setenv("SYMGEN_MAX_CELLS", "4")
        space = HodgeDiamond.p1().to_superspace()
        with pytest.raises(GuardError):
            space.super_symmetric_power(3)


class TestMolien:
    def test_transposition_trace_on_line(self):
        trace = molien_trace(HodgeDiamond.p1(), CycleType(2, (0, 1)))
        assert trace == BidegreePolynomial({(0, 0): 1, (2, 2): 1})

    def test_identity_type_gives_dimension_power(self):
        diamond = HodgeDiamond.elliptic_curve()
        trace = molien_trace(diamond, CycleType(3, (3, 0, 0)))
        assert trace == diamond.to_superspace().graded_dimension_poly() ** 3

    def test_odd_generator_sign(self):
        odd = HodgeDiamond(1, ((0, 0), (1, 0)))
        trace = molien_trace(odd, CycleType(2, (0, 1)))
        assert trace == BidegreePolynomial({(2, 0): -1})

    def test_average_matches_basis_enumeration(self):
        for diamond in all_small_diamonds(max_dim=2, max_total=3):
            space = diamond.to_superspace()
            for n in range(4):
                average = molien_average(diamond, n)
                assert average == space.super_symmetric_power(n).graded_dimension_poly(), (
                    diamond.rows,
                    n,
                )

    def test_average_weights_sum_to_one(self):
        for n in range(1, 7):
            total = sum(Fraction(1, t.centralizer_order()) for t in partitions_of(n))
            assert total == 1
