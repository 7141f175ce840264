"""Generating functions for genera of symmetric products and their orbifolds.

Closed forms computed here, all over exact rationals:

* Euler numbers of symmetric products:          1 / (1 - q)^chi
* orbifold Euler numbers:                       prod_l 1 / (1 - q^l)^chi
* chi_{-y} of symmetric products:               exp( sum_l chi_{-y^l}(X)/l q^l )
* orbifold chi_{-y}:                            exp( sum_l q^l/l * chi_{-y^l}(X)/(1 - (y^{d/2} q)^l) )

and the same pipelines for the polyvector-field genus chi-hat on b-side
diamonds.  Each closed form has an independent brute-force counterpart:
commuting-pair enumeration for the orbifold Euler number, and the delocalized
conjugacy-class sum with fermionic shifts for orbifold chi_{-y}.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .algebra import QSeries, YPolynomial, binomial_coefficient, binomial_power
from .errors import ConventionError, GuardError
from .hodge import THEORY_BSIDE, THEORY_HODGE, HodgeDiamond
from .partitions import commuting_pairs, joint_orbit_count, partitions_of

POSITIVE_Y = "positive-y"
MINUS_Y = "minus-y"
WEIGHT_CONVENTIONS = (POSITIVE_Y, MINUS_Y)

MAX_BRUTEFORCE_N = 6
MAX_DELOCALIZED_N = 12

FLAVORS = ("euler-sym", "euler-orb", "chiy-sym", "chiy-orb", "chihat-sym", "chihat-orb")


@dataclass(frozen=True)
class GenusSeriesRequest:
    """A series computation: which diamond, which flavor, through which q-order."""

    diamond: HodgeDiamond
    max_n: int
    flavor: str

    def __post_init__(self):
        if self.max_n < 0:
            raise ValueError(f"max_n must be >= 0, got {self.max_n}")
        if self.flavor not in FLAVORS:
            raise ValueError(f"unknown flavor {self.flavor!r}; expected one of {FLAVORS}")


@dataclass(frozen=True)
class FermionicShift:
    """Grading shift of a twisted sector, stored as a u-exponent (u = y^(1/2)).

    A block of N_l cycles of length l on a d-fold shifts by y^(N_l (l-1) d / 2),
    i.e. by N_l (l-1) d quanta of u.
    """

    u_quanta: int

    def __post_init__(self):
        if self.u_quanta < 0:
            raise ValueError("symmetric-product shifts are non-negative")

    @classmethod
    def for_cycles(cls, l: int, count: int, dim: int) -> FermionicShift:
        return cls(count * (l - 1) * dim)

    @classmethod
    def for_cycle_type(cls, ctype, dim: int) -> FermionicShift:
        return cls(sum(count * (l - 1) * dim for l, count in ctype.support()))

    def weight(self) -> YPolynomial:
        return YPolynomial.u_power(self.u_quanta)

    def is_integral(self) -> bool:
        """Whether the shift is a whole power of y."""
        return self.u_quanta % 2 == 0


def _require_theory(diamond: HodgeDiamond, theory: str, what: str):
    if diamond.theory != theory:
        raise ValueError(
            f"{what} needs a diamond tagged {theory!r}, got {diamond.theory!r}"
        )


# -- Euler-number flavor (integer fast path) ---------------------------------


def euler_sym_series(chi: int, trunc: int) -> QSeries:
    """Euler numbers of symmetric products: 1/(1 - q)^chi."""
    return binomial_power(chi, trunc)


def euler_orb_series(chi: int, trunc: int) -> QSeries:
    """Orbifold Euler numbers: prod_{l >= 1} 1/(1 - q^l)^chi."""
    result = QSeries.one(trunc)
    for l in range(1, trunc + 1):
        result = result * binomial_power(chi, trunc).stretch(l)
    return result


def euler_orb_classsum(chi: int, n: int) -> int:
    """Conjugacy-class route to the orbifold Euler number.

    Each class of cycle type (N_l) contributes prod_l chi(X^(N_l)), the fixed
    locus of the class modulo its centralizer being prod_l X^(N_l).
    """
    if n == 0:
        return 1
    total = 0
    for ctype in partitions_of(n):
        term = 1
        for l, count in ctype.support():
            term *= binomial_coefficient(chi, count)
        total += term
    return total


def euler_orb_bruteforce(diamond: HodgeDiamond, n: int) -> int:
    """Commuting-pair brute force for the orbifold Euler number of X^n/S_n.

    Averages chi(X)^(number of <g,h>-orbits) over all commuting pairs (g, h)
    in S_n x S_n; the common fixed locus of such a pair is X^(orbit count).
    """
    if n == 0:
        return 1
    if n > MAX_BRUTEFORCE_N:
        raise GuardError(f"commuting-pair brute force supports n <= {MAX_BRUTEFORCE_N}, got {n}")
    chi = diamond.euler_number()
    total = 0
    for g, h in commuting_pairs(n):
        total += chi ** joint_orbit_count(g, h)
    order = math.factorial(n)
    # Burnside-type averages over a group are integral; a remainder here
    # would mean the enumeration itself is broken.
    if total % order:
        raise ArithmeticError(f"pair sum {total} is not divisible by {n}! = {order}")
    return total // order


# -- chi_{-y} and chi-hat pipelines -------------------------------------------


def _sym_series_from_poly(chi_poly: YPolynomial, trunc: int) -> QSeries:
    """exp( sum_{l=1..trunc} chi_{-y^l} q^l / l )."""
    arg = QSeries.zero(trunc)
    for l in range(1, trunc + 1):
        arg = arg + QSeries.term(chi_poly.substitute_y_power(l) * Fraction(1, l), l, trunc)
    return arg.exp()


def _orb_series_from_poly(chi_poly: YPolynomial, dim: int, trunc: int) -> QSeries:
    """exp( sum_l q^l/l * chi_{-y^l} * sum_{m >= 0} (y^{d/2} q)^{lm} ).

    The inner geometric series carries u^(d l m) = y^(d l m / 2), so
    half-integer powers of y appear exactly when d is odd.
    """
    arg = QSeries.zero(trunc)
    for l in range(1, trunc + 1):
        sub = chi_poly.substitute_y_power(l) * Fraction(1, l)
        for m in range(trunc // l):
            coeff = sub * YPolynomial.u_power(dim * l * m)
            arg = arg + QSeries.term(coeff, l * (m + 1), trunc)
    return arg.exp()


def _orb_delocalized_from_poly(
    chi_poly: YPolynomial, dim: int, n: int, convention: str
) -> YPolynomial:
    """Conjugacy-class sum with fermionic shifts.

    Each cycle type contributes prod_l [shift weight] * [q^(N_l) coefficient of
    the symmetric-product series], the fixed locus of the class modulo its
    centralizer being prod_l X^(N_l).
    """
    if convention not in WEIGHT_CONVENTIONS:
        raise ValueError(f"unknown weight convention {convention!r}")
    if n == 0:
        return YPolynomial.one()
    if n > MAX_DELOCALIZED_N:
        raise GuardError(f"delocalized class sum supports n <= {MAX_DELOCALIZED_N}, got {n}")
    sym = _sym_series_from_poly(chi_poly, n)
    total = YPolynomial.zero()
    for ctype in partitions_of(n):
        shift = FermionicShift.for_cycle_type(ctype, dim)
        term = shift.weight()
        if convention == MINUS_Y:
            # (-y)^F = (-1)^F y^F needs F integral; for half-integer F the sign
            # has no square root of -y in the exact Laurent ring.
            if not shift.is_integral():
                raise ConventionError(
                    f"class {ctype} has half-integer shift {shift.u_quanta}/2; "
                    f"the {MINUS_Y} weight has no exact representation"
                )
            if (shift.u_quanta // 2) % 2:
                term = -term
        for l, count in ctype.support():
            term = term * sym.coefficient(count)
        total = total + term
    return total


def chiy_sym_series(diamond: HodgeDiamond, trunc: int) -> QSeries:
    """chi_{-y} genera of the symmetric products of X, as a q-series."""
    _require_theory(diamond, THEORY_HODGE, "chiy_sym_series")
    return _sym_series_from_poly(diamond.chi_minus_y(), trunc)


def chiy_orb_series(diamond: HodgeDiamond, trunc: int) -> QSeries:
    """Orbifold chi_{-y} genera of (X^n, S_n), as a q-series."""
    _require_theory(diamond, THEORY_HODGE, "chiy_orb_series")
    return _orb_series_from_poly(diamond.chi_minus_y(), diamond.dim, trunc)


def chiy_orb_delocalized(
    diamond: HodgeDiamond, n: int, convention: str = POSITIVE_Y
) -> YPolynomial:
    """Orbifold chi_{-y} of (X^n, S_n) by the delocalized conjugacy-class sum."""
    _require_theory(diamond, THEORY_HODGE, "chiy_orb_delocalized")
    return _orb_delocalized_from_poly(diamond.chi_minus_y(), diamond.dim, n, convention)


def chihat_sym_series(diamond: HodgeDiamond, trunc: int) -> QSeries:
    """chi-hat genera of symmetric products, from a b-side (polyvector) diamond."""
    _require_theory(diamond, THEORY_BSIDE, "chihat_sym_series")
    return _sym_series_from_poly(diamond.chi_minus_y(), trunc)


def chihat_orb_series(diamond: HodgeDiamond, trunc: int) -> QSeries:
    """Orbifold chi-hat genera, from a b-side diamond."""
    _require_theory(diamond, THEORY_BSIDE, "chihat_orb_series")
    return _orb_series_from_poly(diamond.chi_minus_y(), diamond.dim, trunc)


def chihat_orb_delocalized(
    diamond: HodgeDiamond, n: int, convention: str = POSITIVE_Y
) -> YPolynomial:
    """Delocalized class sum for the orbifold chi-hat genus."""
    _require_theory(diamond, THEORY_BSIDE, "chihat_orb_delocalized")
    return _orb_delocalized_from_poly(diamond.chi_minus_y(), diamond.dim, n, convention)


def genus_series(request: GenusSeriesRequest) -> QSeries:
    """Dispatch a GenusSeriesRequest to the matching pipeline."""
    diamond, trunc = request.diamond, request.max_n
    if request.flavor == "euler-sym":
        return euler_sym_series(diamond.euler_number(), trunc)
    if request.flavor == "euler-orb":
        return euler_orb_series(diamond.euler_number(), trunc)
    if request.flavor == "chiy-sym":
        return chiy_sym_series(diamond, trunc)
    if request.flavor == "chiy-orb":
        return chiy_orb_series(diamond, trunc)
    if request.flavor == "chihat-sym":
        return chihat_sym_series(diamond, trunc)
    return chihat_orb_series(diamond, trunc)
