import math

import pytest

from symgen import (
    CycleType,
    GuardError,
    Permutation,
    all_permutations,
    commuting_pairs,
    joint_orbit_count,
    orbit_decomposition_on_words,
    partitions_of,
)

from conftest import count_partitions, necklace_count


class TestCycleType:
    def test_validation(self):
        CycleType(3, (1, 1, 0))
        with pytest.raises(ValueError):
            CycleType(3, (1, 0, 0))
        with pytest.raises(ValueError):
            CycleType(2, (2,))

    def test_centralizer_orders_small(self):
        assert CycleType(2, (2, 0)).centralizer_order() == 2
        assert CycleType(2, (0, 1)).centralizer_order() == 2
        assert CycleType(3, (0, 0, 1)).centralizer_order() == 3
        assert CycleType(1, (1,)).centralizer_order() == 1

    def test_class_size(self):
        # the 2 three-cycles of S_3 form a class of size 2 = 6/3
        assert CycleType(3, (0, 0, 1)).class_size() == 2


class TestPartitionsOf:
    def test_n1(self):
        assert [t.counts for t in partitions_of(1)] == [(1,)]

    def test_n3_order(self):
        assert [t.counts for t in partitions_of(3)] == [(3, 0, 0), (1, 1, 0), (0, 0, 1)]

    def test_n5_count(self):
        assert len(partitions_of(5)) == 7

    def test_counts_match_recursive_oracle(self):
        for n in range(1, 21):
            assert len(partitions_of(n)) == count_partitions(n)

    def test_each_exactly_once(self):
        types = partitions_of(8)
        assert len({t.counts for t in types}) == len(types)

    def test_class_equation(self):
        for n in range(1, 10):
            assert sum(t.class_size() for t in partitions_of(n)) == math.factorial(n)

    def test_guards(self):
        with pytest.raises(GuardError):
            partitions_of(0)
        with pytest.raises(GuardError):
            partitions_of(41)


class TestPermutation:
    def test_bijectivity_checked(self):
        with pytest.raises(ValueError):
            Permutation((0, 0, 1))

    def test_composition_and_cycles(self):
        g = Permutation((1, 2, 0))  # a 3-cycle
        assert (g * g * g) == Permutation.identity(3)
        assert g.cycle_type().counts == (0, 0, 1)
        transposition = Permutation((1, 0, 2))
        assert transposition.cycle_type().counts == (1, 1, 0)

    def test_joint_orbits(self):
        g = Permutation((1, 0, 2, 3))
        h = Permutation((0, 1, 3, 2))
        assert joint_orbit_count(g, h) == 2
        e = Permutation.identity(4)
        assert joint_orbit_count(e, e) == 4


class TestCommutingPairs:
    def test_s2_abelian(self):
        assert len(commuting_pairs(2)) == 4

    def test_s1(self):
        assert len(commuting_pairs(1)) == 1

    def test_class_equation_count(self):
        # sum over g of |Z_g| = p(n) * n!
        for n in range(1, 6):
            expected = count_partitions(n) * math.factorial(n)
            assert len(commuting_pairs(n)) == expected

    def test_pairs_commute(self):
        for g, h in commuting_pairs(3):
            assert g * h == h * g

    def test_guard(self):
        with pytest.raises(GuardError):
            commuting_pairs(8)
        with pytest.raises(GuardError):
            all_permutations(10)


class TestWordOrbits:
    def test_two_letters_length_two(self):
        orbits = orbit_decomposition_on_words(2, 2)
        assert orbits == [((0, 0), 1), ((0, 1), 2), ((1, 1), 1)]

    def test_single_letter(self):
        assert orbit_decomposition_on_words(1, 5) == [((0, 0, 0, 0, 0), 1)]

    def test_two_letters_length_three(self):
        orbits = orbit_decomposition_on_words(2, 3)
        lengths = sorted(length for _, length in orbits)
        assert lengths == [1, 1, 3, 3]
        assert len(orbits) == necklace_count(2, 3)

    def test_lengths_divide_n_and_cover(self):
        for r, n in [(2, 5), (3, 4), (4, 3)]:
            orbits = orbit_decomposition_on_words(r, n)
            assert all(n % length == 0 for _, length in orbits)
            assert sum(length for _, length in orbits) == r**n
            assert len(orbits) == necklace_count(r, n)

    def test_guard_respects_environment(self, monkeypatch):
        monkeypatch.setenv("SYMGEN_MAX_CELLS", "8")
        with pytest.raises(GuardError):
            orbit_decomposition_on_words(3, 2)
        assert orbit_decomposition_on_words(2, 3)
