"""Hodge diamonds, chi_y polynomials, and the two cohomology-level oracles.

A diamond stores the matrix h^{p,q} of a closed complex d-manifold.  The same
container doubles as the polyvector-field ("b-side") table h^{-p,q} =
dim H^q(M, Lambda^p TM); a theory tag records which reading is meant, since
the genus formulas are identical and only the input semantics differ.

Two independent routes to symmetric-product cohomology live here:

* ``super_symmetric_power`` enumerates an explicit monomial basis of the
  graded symmetric power (even generators combine symmetrically, odd ones
  antisymmetrically, bidegrees add);
* ``molien_trace`` / ``molien_average`` compute the same dimensions as a
  conjugacy-class average of graded traces.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction

from .algebra import YPolynomial
from .errors import check_cells
from .partitions import CycleType, partitions_of

THEORY_HODGE = "hodge"
THEORY_BSIDE = "b-side"


@dataclass(frozen=True)
class HodgeDiamond:
    """(d+1) x (d+1) matrix of Hodge numbers; rows[p][q] is h^{p,q} (or h^{-p,q})."""

    dim: int
    rows: tuple[tuple[int, ...], ...]
    theory: str = THEORY_HODGE

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(tuple(row) for row in self.rows))
        if self.dim < 0:
            raise ValueError(f"dimension must be >= 0, got {self.dim}")
        if self.theory not in (THEORY_HODGE, THEORY_BSIDE):
            raise ValueError(f"unknown theory tag {self.theory!r}")
        if len(self.rows) != self.dim + 1 or any(len(row) != self.dim + 1 for row in self.rows):
            raise ValueError(f"need a {self.dim + 1} x {self.dim + 1} matrix")
        for row in self.rows:
            for entry in row:
                if not isinstance(entry, int) or entry < 0:
                    raise ValueError(f"Hodge numbers must be non-negative integers, got {entry!r}")

    # -- standard inputs -----------------------------------------------------

    @classmethod
    def point(cls) -> HodgeDiamond:
        return cls(0, ((1,),))

    @classmethod
    def p1(cls) -> HodgeDiamond:
        return cls(1, ((1, 0), (0, 1)))

    @classmethod
    def elliptic_curve(cls) -> HodgeDiamond:
        return cls(1, ((1, 1), (1, 1)))

    @classmethod
    def projective_space(cls, d: int) -> HodgeDiamond:
        rows = tuple(tuple(1 if p == q else 0 for q in range(d + 1)) for p in range(d + 1))
        return cls(d, rows)

    @classmethod
    def p1_times_p1(cls) -> HodgeDiamond:
        return cls(2, ((1, 0, 0), (0, 2, 0), (0, 0, 1)))

    @classmethod
    def p1_bside(cls) -> HodgeDiamond:
        """Polyvector table of the projective line: h^{-0,0} = 1, h^{-1,0} = 3."""
        return cls(1, ((1, 0), (3, 0)), theory=THEORY_BSIDE)

    # -- basic invariants ------------------------------------------------------

    def entry(self, p: int, q: int) -> int:
        return self.rows[p][q]

    def total_dimension(self) -> int:
        return sum(sum(row) for row in self.rows)

    def chi_minus_y(self) -> YPolynomial:
        """sum_{p,q} (-1)^(p+q) h^{p,q} y^p, the chi_{-y} genus as a polynomial in y."""
        terms = {}
        for p, row in enumerate(self.rows):
            c = sum((-1) ** (p + q) * h for q, h in enumerate(row))
            if c:
                terms[2 * p] = c
        return YPolynomial(terms)

    def euler_number(self) -> int:
        """sum (-1)^(p+q) h^{p,q}; equals chi_minus_y evaluated at y = 1."""
        return sum((-1) ** (p + q) * h for p, row in enumerate(self.rows) for q, h in enumerate(row))

    def serre_symmetric(self) -> bool:
        d = self.dim
        return all(
            self.rows[p][q] == self.rows[d - p][d - q] for p in range(d + 1) for q in range(d + 1)
        )

    def to_superspace(self) -> BigradedSuperSpace:
        dims = {}
        for p, row in enumerate(self.rows):
            for q, h in enumerate(row):
                if h:
                    dims[(p, q)] = h
        return BigradedSuperSpace(dims)


class BidegreePolynomial:
    """Bookkeeping polynomial in two variables (s, t) recording bidegrees."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for key, c in terms.items():
                c = c if isinstance(c, Fraction) else Fraction(c)
                if c:
                    clean[(int(key[0]), int(key[1]))] = c
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("BidegreePolynomial is immutable")

    @classmethod
    def zero(cls) -> BidegreePolynomial:
        return cls()

    @classmethod
    def one(cls) -> BidegreePolynomial:
        return cls({(0, 0): 1})

    def __eq__(self, other):
        if not isinstance(other, BidegreePolynomial):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(tuple(sorted(self.terms.items())))

    def __add__(self, other):
        out = dict(self.terms)
        for key, c in other.terms.items():
            s = out.get(key, Fraction(0)) + c
            if s:
                out[key] = s
            else:
                out.pop(key, None)
        return BidegreePolynomial(out)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return BidegreePolynomial({k: c * other for k, c in self.terms.items()})
        out = {}
        for (p1, q1), c1 in self.terms.items():
            for (p2, q2), c2 in other.terms.items():
                key = (p1 + p2, q1 + q2)
                s = out.get(key, Fraction(0)) + c1 * c2
                if s:
                    out[key] = s
                else:
                    out.pop(key, None)
        return BidegreePolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        result = BidegreePolynomial.one()
        for _ in range(n):
            result = result * self
        return result

    def __str__(self):
        if not self.terms:
            return "0"
        bits = []
        for (p, q), c in sorted(self.terms.items()):
            mono = "*".join(
                part
                for part in (
                    f"s^{p}" if p else "",
                    f"t^{q}" if q else "",
                )
                if part
            )
            bits.append(f"{c}" + (f"*{mono}" if mono else ""))
        return " + ".join(bits)

    def __repr__(self):
        return f"BidegreePolynomial({self.terms!r})"


@dataclass(frozen=True)
class BigradedSuperSpace:
    """Finitely supported bigraded vector space; parity of (p, q) is (p+q) mod 2."""

    dims: dict = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for (p, q), m in self.dims.items():
            if m < 0:
                raise ValueError("dimensions must be non-negative")
            if m:
                clean[(int(p), int(q))] = int(m)
        object.__setattr__(self, "dims", clean)

    def __eq__(self, other):
        if not isinstance(other, BigradedSuperSpace):
            return NotImplemented
        return self.dims == other.dims

    def __hash__(self):
        return hash(tuple(sorted(self.dims.items())))

    def dimension(self, p: int, q: int) -> int:
        return self.dims.get((p, q), 0)

    def total_dimension(self) -> int:
        return sum(self.dims.values())

    def euler_number(self) -> int:
        return sum((-1) ** (p + q) * m for (p, q), m in self.dims.items())

    def chi_minus_y(self) -> YPolynomial:
        terms = {}
        for (p, q), m in self.dims.items():
            key = 2 * p
            terms[key] = terms.get(key, 0) + (-1) ** (p + q) * m
        return YPolynomial(terms)

    def graded_dimension_poly(self) -> BidegreePolynomial:
        return BidegreePolynomial({key: m for key, m in self.dims.items()})

    def basis(self):
        """One label per basis vector: (p, q, parity), in sorted bidegree order."""
        out = []
        for (p, q) in sorted(self.dims):
            out.extend([(p, q, (p + q) % 2)] * self.dims[(p, q)])
        return out

    def super_symmetric_power(self, n: int) -> BigradedSuperSpace:
        """Graded symmetric power: multisets of even generators, subsets of odd ones.

        Monomial enumeration keeps this an oracle independent of any closed
        form; the Koszul rule kills any repeated odd generator.
        """
        if n < 0:
            raise ValueError(f"power must be >= 0, got {n}")
        check_cells(self.total_dimension() ** n, what="graded symmetric power basis")
        even = [(p, q) for (p, q, parity) in self.basis() if parity == 0]
        odd = [(p, q) for (p, q, parity) in self.basis() if parity == 1]
        dims = {}
        for b in range(min(n, len(odd)) + 1):
            a = n - b
            for odd_pick in itertools.combinations(odd, b):
                for even_pick in itertools.combinations_with_replacement(even, a):
                    p = sum(x for x, _ in odd_pick) + sum(x for x, _ in even_pick)
                    q = sum(x for _, x in odd_pick) + sum(x for _, x in even_pick)
                    dims[(p, q)] = dims.get((p, q), 0) + 1
        return BigradedSuperSpace(dims)


def molien_trace(diamond: HodgeDiamond, ctype: CycleType) -> BidegreePolynomial:
    """Graded trace of any permutation of the given cycle type on H^{* ,*}(X)^(tensor n).

    An l-cycle acting on the l-fold tensor power contributes
    sum_{p,q} (-1)^((l-1)(p+q)) h^{p,q} s^(lp) t^(lq); cycles multiply.
    """
    result = BidegreePolynomial.one()
    for l, count in ctype.support():
        block = {}
        for p, row in enumerate(diamond.rows):
            for q, h in enumerate(row):
                if h:
                    sign = (-1) ** ((l - 1) * (p + q))
                    key = (l * p, l * q)
                    block[key] = block.get(key, 0) + sign * h
        result = result * (BidegreePolynomial(block) ** count)
    return result


def molien_average(diamond: HodgeDiamond, n: int) -> BidegreePolynomial:
    """Class-averaged graded trace: the bigraded dimensions of the invariants.

    Equals (1/n!) sum_g trace(g), organized as sum over cycle types weighted
    by 1/centralizer_order.
    """
    if n == 0:
        return BidegreePolynomial.one()
    total = BidegreePolynomial.zero()
    for ctype in partitions_of(n):
        total = total + molien_trace(diamond, ctype) * Fraction(1, ctype.centralizer_order())
    return total
