"""Formal K-theory of line-bundle sums: Adams operations and the cyclic eigenbundle map.

A rank-r sum of formal line bundles L_1 + ... + L_r has n-th tensor power
spanned by words (j_1, ..., j_n); the long cycle acts by rotating indices,
with Koszul signs when the lines carry odd degrees.  The eigenbundle map of
the cycle is computed as a monomial-weighted trace: the diagonal entry of the
(signed) rotation at a word is 0 unless the word is constant, so the trace
collapses to the (graded) Adams image

    sum_m (+-1) L_m^n,    sign (-1)^((n-1) d_m) in the graded case.

Non-constant orbits contribute zero; ``character_orbit_check`` verifies that
block by block.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .algebra import YPolynomial
from .errors import VerificationError, check_cells
from .partitions import orbit_decomposition_on_words


@dataclass(frozen=True)
class LineSymbol:
    """A formal line bundle L_<ident> with an integer grading degree."""

    ident: int
    degree: int = 0


def _check_lines(lines):
    lines = tuple(lines)
    ids = [line.ident for line in lines]
    if len(set(ids)) != len(ids):
        raise ValueError(f"line symbol ids must be distinct, got {ids}")
    return lines


class KClass:
    """Formal sum of line-bundle monomials with YPolynomial coefficients.

    A monomial is a sorted tuple of (line id, power) pairs, e.g.
    ((1, 2),) for L1^2 or ((1, 1), (2, 1)) for L1*L2.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for monomial, coeff in terms.items():
                if not isinstance(coeff, YPolynomial):
                    coeff = YPolynomial.constant(coeff)
                if coeff.is_zero():
                    continue
                key = tuple(sorted((int(i), int(a)) for i, a in monomial))
                if any(a <= 0 for _, a in key):
                    raise ValueError(f"monomial powers must be positive, got {key}")
                clean[key] = coeff
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("KClass is immutable")

    @classmethod
    def zero(cls) -> KClass:
        return cls()

    @classmethod
    def line_power(cls, ident: int, power: int, coeff=1) -> KClass:
        return cls({((ident, power),): coeff})

    @classmethod
    def from_lines(cls, lines) -> KClass:
        out = cls.zero()
        for line in _check_lines(lines):
            out = out + cls.line_power(line.ident, 1)
        return out

    @staticmethod
    def word_monomial(lines, word):
        """Monomial key of L_{j_1} ... L_{j_n} for a word of indices into `lines`."""
        powers = {}
        for j in word:
            ident = lines[j].ident
            powers[ident] = powers.get(ident, 0) + 1
        return tuple(sorted(powers.items()))

    def __eq__(self, other):
        if not isinstance(other, KClass):
            return NotImplemented
        return self.terms == other.terms

    def __add__(self, other):
        out = dict(self.terms)
        for key, c in other.terms.items():
            s = out.get(key, YPolynomial.zero()) + c
            if s.is_zero():
                out.pop(key, None)
            else:
                out[key] = s
        return KClass(out)

    def __neg__(self):
        return KClass({key: -c for key, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, scalar):
        if isinstance(scalar, (int, Fraction)):
            scalar = YPolynomial.constant(scalar)
        if not isinstance(scalar, YPolynomial):
            return NotImplemented
        return KClass({key: c * scalar for key, c in self.terms.items()})

    __rmul__ = __mul__

    @staticmethod
    def _monomial_str(monomial):
        return "*".join(f"L{i}" + (f"^{a}" if a > 1 else "") for i, a in monomial)

    def __str__(self):
        if not self.terms:
            return "0"
        bits = []
        for key in sorted(self.terms):
            c = self.terms[key]
            if c == YPolynomial.one():
                bits.append(self._monomial_str(key))
            elif c == -YPolynomial.one():
                bits.append(f"-{self._monomial_str(key)}")
            else:
                bits.append(f"({c})*{self._monomial_str(key)}")
        return " + ".join(bits)

    def __repr__(self):
        return f"KClass({self.terms!r})"


def adams(lines, n: int) -> KClass:
    """Adams operation on a line sum: L_1^n + ... + L_r^n."""
    if n < 1:
        raise ValueError(f"Adams power must be >= 1, got {n}")
    out = KClass.zero()
    for line in _check_lines(lines):
        out = out + KClass.line_power(line.ident, n)
    return out


def graded_adams(lines, n: int) -> KClass:
    """Graded Adams operation: sum_m (-1)^((n-1) d_m) L_m^n."""
    if n < 1:
        raise ValueError(f"Adams power must be >= 1, got {n}")
    out = KClass.zero()
    for line in _check_lines(lines):
        sign = (-1) ** ((n - 1) * line.degree)
        out = out + KClass.line_power(line.ident, n, sign)
    return out


def _shift(word):
    """One step of index cycling: (j_1, ..., j_n) -> (j_n, j_1, ..., j_{n-1})."""
    return word[-1:] + word[:-1]


def _shift_sign(word, degrees, graded):
    """Koszul sign of moving the last tensor factor to the front."""
    if not graded:
        return 1
    moved = degrees[word[-1]]
    passed = sum(degrees[j] for j in word[:-1])
    return -1 if (moved * passed) % 2 else 1


def phi_cycle_tensor(lines, n: int, graded: bool = False) -> KClass:
    """Eigenbundle map of the long cycle on the n-th tensor power of a line sum.

    Computed as the monomial-weighted trace of the (signed) rotation on the
    word basis: diagonal entries vanish off the constant words, which carry
    +-1, so the result matches adams / graded_adams without any root-of-unity
    arithmetic.
    """
    if n < 1:
        raise ValueError(f"tensor power must be >= 1, got {n}")
    lines = _check_lines(lines)
    r = len(lines)
    check_cells(r**n, what="tensor-power word basis")
    degrees = [line.degree for line in lines]
    out = KClass.zero()
    for word in itertools.product(range(r), repeat=n):
        if _shift(word) != word:
            continue
        sign = _shift_sign(word, degrees, graded)
        out = out + KClass({KClass.word_monomial(lines, word): sign})
    return out


@dataclass(frozen=True)
class OrbitTrace:
    """Trace data of the rotation on the span of one word orbit."""

    representative: tuple[int, ...]
    length: int
    trace: int


@dataclass(frozen=True)
class CharacterReport:
    rank: int
    power: int
    graded: bool
    orbits: tuple[OrbitTrace, ...]

    @property
    def nonfixed_traces_all_zero(self) -> bool:
        return all(o.trace == 0 for o in self.orbits if o.length > 1)

    @property
    def fixed_count(self) -> int:
        return sum(1 for o in self.orbits if o.length == 1)

    def summary(self) -> str:
        fixed = self.fixed_count
        moving = len(self.orbits) - fixed
        ok = "all zero" if self.nonfixed_traces_all_zero else "NONZERO FOUND"
        return (
            f"rank {self.rank}, power {self.power}, {'graded' if self.graded else 'ungraded'}: "
            f"{fixed} fixed words, {moving} moving orbits, moving-block traces {ok}"
        )


def character_orbit_check(lines, n: int, graded: bool = False) -> CharacterReport:
    """Per-orbit block traces of the (signed) rotation on the word basis.

    Every orbit of length > 1 spans a block whose trace must be exactly 0
    (its eigenvalues are a full coset of roots of unity); fixed words carry
    trace +-1.  Orbit lengths must divide n.
    """
    if n < 1:
        raise ValueError(f"tensor power must be >= 1, got {n}")
    lines = _check_lines(lines)
    r = len(lines)
    check_cells(r**n, default=100_000, what="character orbit scan")
    degrees = [line.degree for line in lines]
    entries = []
    for rep, length in orbit_decomposition_on_words(r, n):
        if n % length:
            raise VerificationError(f"orbit of {rep} has length {length}, which does not divide {n}")
        trace = 0
        word = rep
        for _ in range(length):
            if _shift(word) == word:
                trace += _shift_sign(word, degrees, graded)
            word = _shift(word)
        entries.append(OrbitTrace(rep, length, trace))
    return CharacterReport(r, n, graded, tuple(entries))
