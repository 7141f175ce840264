"""Symmetric-group combinatorics: cycle types, centralizers, and brute-force enumeration.

Class sums over S_n are always driven by cycle types (p(n) of them), never by
the n! explicit permutations; permutations exist only for the commuting-pair
Euler brute force and small sanity checks.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from .errors import GuardError, check_cells

MAX_PARTITION_N = 40
MAX_PAIR_N = 7
MAX_PERMUTATION_N = 9


@dataclass(frozen=True)
class CycleType:
    """Cycle type of a permutation in S_n: counts[l-1] = number of l-cycles."""

    n: int
    counts: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "counts", tuple(self.counts))
        if self.n < 0:
            raise ValueError(f"n must be >= 0, got {self.n}")
        if len(self.counts) != self.n:
            raise ValueError(f"expected {self.n} cycle counts, got {len(self.counts)}")
        if any(c < 0 for c in self.counts):
            raise ValueError("cycle counts must be non-negative")
        total = sum(l * c for l, c in enumerate(self.counts, start=1))
        if total != self.n:
            raise ValueError(f"cycle counts {self.counts} sum to {total}, not {self.n}")

    def count(self, l: int) -> int:
        """Number of l-cycles."""
        return self.counts[l - 1] if 1 <= l <= self.n else 0

    def support(self):
        """Pairs (l, N_l) with N_l > 0, in increasing l."""
        return tuple((l, c) for l, c in enumerate(self.counts, start=1) if c)

    def centralizer_order(self) -> int:
        """prod_l l^(N_l) * N_l!, the order of the centralizer in S_n."""
        z = 1
        for l, c in self.support():
            z *= l**c * math.factorial(c)
        return z

    def class_size(self) -> int:
        return math.factorial(self.n) // self.centralizer_order()

    def __str__(self):
        return "(" + ",".join(str(c) for c in self.counts) + ")"


def _partition_parts(n, max_part):
    if n == 0:
        yield ()
        return
    for k in range(min(n, max_part), 0, -1):
        for rest in _partition_parts(n - k, k):
            yield (k,) + rest


def partitions_of(n: int) -> list[CycleType]:
    """All cycle types of S_n, in descending lexicographic order on (N_1, ..., N_n).

    The identity class (n, 0, ..., 0) comes first and the single n-cycle
    class (0, ..., 0, 1) last.
    """
    if not 1 <= n <= MAX_PARTITION_N:
        raise GuardError(f"partitions_of supports 1 <= n <= {MAX_PARTITION_N}, got {n}")
    types = []
    for parts in _partition_parts(n, n):
        counts = [0] * n
        for part in parts:
            counts[part - 1] += 1
        types.append(CycleType(n, tuple(counts)))
    types.sort(key=lambda t: t.counts, reverse=True)
    return types


@dataclass(frozen=True)
class Permutation:
    """Permutation of {0, ..., n-1}, stored by its tuple of images."""

    images: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "images", tuple(self.images))
        if sorted(self.images) != list(range(len(self.images))):
            raise ValueError(f"{self.images} is not a bijection of 0..{len(self.images) - 1}")

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(n)))

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i]

    def __mul__(self, other: Permutation) -> Permutation:
        """Composition: (g * h)(i) = g(h(i))."""
        return Permutation(tuple(self.images[j] for j in other.images))

    def cycles(self):
        seen = [False] * self.n
        out = []
        for start in range(self.n):
            if seen[start]:
                continue
            cycle = []
            i = start
            while not seen[i]:
                seen[i] = True
                cycle.append(i)
                i = self.images[i]
            out.append(tuple(cycle))
        return out

    def cycle_type(self) -> CycleType:
        counts = [0] * self.n
        for cycle in self.cycles():
            counts[len(cycle) - 1] += 1
        return CycleType(self.n, tuple(counts))


def all_permutations(n: int) -> list[Permutation]:
    if not 1 <= n <= MAX_PERMUTATION_N:
        raise GuardError(f"all_permutations supports 1 <= n <= {MAX_PERMUTATION_N}, got {n}")
    return [Permutation(p) for p in itertools.permutations(range(n))]


def commuting_pairs(n: int) -> list[tuple[Permutation, Permutation]]:
    """All ordered pairs (g, h) in S_n x S_n with gh = hg."""
    if not 1 <= n <= MAX_PAIR_N:
        raise GuardError(f"commuting_pairs supports 1 <= n <= {MAX_PAIR_N}, got {n}")
    perms = all_permutations(n)
    pairs = []
    for g in perms:
        gi = g.images
        for h in perms:
            hi = h.images
            if all(gi[hi[i]] == hi[gi[i]] for i in range(n)):
                pairs.append((g, h))
    return pairs


def joint_orbit_count(g: Permutation, h: Permutation) -> int:
    """Number of orbits of the subgroup generated by g and h on {0, ..., n-1}."""
    n = g.n
    parent = list(range(n))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for perm in (g, h):
        for i in range(n):
            a, b = find(i), find(perm.images[i])
            if a != b:
                parent[a] = b
    return sum(1 for i in range(n) if find(i) == i)


def orbit_decomposition_on_words(r: int, n: int) -> list[tuple[tuple[int, ...], int]]:
    """Orbits of the cyclic shift on words of length n over r letters.

    Returns (lexicographically smallest word of the orbit, orbit length)
    pairs, sorted by representative.  Orbit lengths divide n and their sum
    over all orbits is r^n.
    """
    if r < 1 or n < 1:
        raise ValueError("need r >= 1 and n >= 1")
    check_cells(r**n, what="cyclic word orbits")
    orbits = []
    for word in itertools.product(range(r), repeat=n):
        rotations = {word[i:] + word[:i] for i in range(n)}
        if word == min(rotations):
            orbits.append((word, len(rotations)))
    return orbits
