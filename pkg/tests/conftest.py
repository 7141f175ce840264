"""Shared independent oracles for the test suite.

These deliberately avoid the package's own series machinery: polynomial
convolution on plain integer lists, a textbook partition recursion, and
Burnside counting for necklaces.
"""

from fractions import Fraction

import pytest

from symgen import HodgeDiamond


def convolve(a, b, order):
    """Cauchy product of two coefficient lists, through the given order."""
    out = [Fraction(0)] * (order + 1)
    for i, x in enumerate(a[: order + 1]):
        for j, y in enumerate(b[: order + 1 - i]):
            out[i + j] += Fraction(x) * Fraction(y)
    return out


def count_partitions(n, largest=None):
    """Number of partitions of n with parts of size <= largest."""
    if largest is None:
        largest = n
    if n == 0:
        return 1
    if largest <= 0:
        return 0
    if largest > n:
        largest = n
    return count_partitions(n - largest, largest) + count_partitions(n, largest - 1)


def euler_phi(n):
    count = 0
    for k in range(1, n + 1):
        a, b = n, k
        while b:
            a, b = b, a % b
        if a == 1:
            count += 1
    return count


def necklace_count(r, n):
    """Burnside count of cyclic-shift orbits on length-n words over r letters."""
    total = sum(euler_phi(d) * r ** (n // d) for d in range(1, n + 1) if n % d == 0)
    return total // n


def all_small_diamonds(max_dim, max_total):
    """Every diamond with dim <= max_dim and total dimension <= max_total."""
    import itertools

    for d in range(max_dim + 1):
        cells = (d + 1) ** 2
        for total in range(1, max_total + 1):
            for combo in itertools.combinations_with_replacement(range(cells), total):
                rows = [[0] * (d + 1) for _ in range(d + 1)]
                for cell in combo:
                    rows[cell // (d + 1)][cell % (d + 1)] += 1
                yield HodgeDiamond(d, tuple(tuple(row) for row in rows))


@pytest.fixture
def p1():
    return HodgeDiamond.p1()
