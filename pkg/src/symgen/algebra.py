"""Exact coefficient arithmetic for the genera pipelines.

Three layers, all exact and immutable:

* ``Rational`` -- arbitrary-precision rationals (``fractions.Fraction``).
* ``YPolynomial`` -- Laurent polynomials in a variable u with u^2 = y, so the
  half-integer powers of y produced by fermionic grading shifts are ordinary
  integer powers of u.
* ``QSeries`` -- power series in q truncated at an explicit order, with
  YPolynomial coefficients.

No floating point appears anywhere; every identity checked downstream is an
exact equality of these values.
"""

from __future__ import annotations

import math
from fractions import Fraction

Rational = Fraction


def _as_rational(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"expected an integer or Fraction, got {type(value).__name__}")


class YPolynomial:
    """Laurent polynomial in u = y^(1/2).

    Terms map the integer u-exponent to a nonzero rational coefficient; the
    power y^k is stored at u-exponent 2k.  Instances are immutable.

    >>> p = YPolynomial.y_power(1) + 1
    >>> str(p * p)
    '1 + 2*y + y^2'
    >>> str(YPolynomial.u_power(3))
    'y^(3/2)'
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for exponent, coeff in terms.items():
                coeff = _as_rational(coeff)
                if coeff:
                    clean[int(exponent)] = coeff
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("YPolynomial is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> YPolynomial:
        return cls()

    @classmethod
    def one(cls) -> YPolynomial:
        return cls({0: 1})

    @classmethod
    def constant(cls, value) -> YPolynomial:
        return cls({0: _as_rational(value)})

    @classmethod
    def y_power(cls, k: int, coeff=1) -> YPolynomial:
        """The monomial coeff * y^k (k may be negative)."""
        return cls({2 * k: coeff})

    @classmethod
    def u_power(cls, a: int, coeff=1) -> YPolynomial:
        """The monomial coeff * u^a, i.e. coeff * y^(a/2)."""
        return cls({a: coeff})

    @staticmethod
    def _coerce(value):
        if isinstance(value, YPolynomial):
            return value
        if isinstance(value, (int, Fraction)):
            return YPolynomial.constant(value)
        return None

    # -- queries -----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, u_exponent: int) -> Fraction:
        return self.terms.get(u_exponent, Fraction(0))

    def constant_term(self) -> Fraction:
        return self.coefficient(0)

    def is_constant(self) -> bool:
        return all(a == 0 for a in self.terms)

    def pairs(self):
        """Terms as a tuple of (u_exponent, coefficient), sorted by exponent."""
        return tuple(sorted(self.terms.items()))

    def at_one(self) -> Fraction:
        """Evaluate at u = 1 (equivalently y = 1)."""
        return sum(self.terms.values(), Fraction(0))

    # -- arithmetic ---------------------------------------------------------

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(self.pairs())

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self.terms)
        for a, c in other.terms.items():
            s = out.get(a, Fraction(0)) + c
            if s:
                out[a] = s
            else:
                out.pop(a, None)
        return YPolynomial(out)

    __radd__ = __add__

    def __neg__(self):
        return YPolynomial({a: -c for a, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = {}
        for a, c in self.terms.items():
            for b, d in other.terms.items():
                key = a + b
                s = out.get(key, Fraction(0)) + c * d
                if s:
                    out[key] = s
                else:
                    out.pop(key, None)
        return YPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers need inverse(); only monomials are units")
        result = YPolynomial.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def inverse(self) -> YPolynomial:
        """Invert a unit, i.e. a single-term monomial c*u^a."""
        if len(self.terms) != 1:
            raise ValueError(f"{self} is not a unit in the Laurent ring")
        ((a, c),) = self.terms.items()
        return YPolynomial({-a: Fraction(1) / c})

    # -- substitutions -------------------------------------------------------

    def substitute_y_power(self, l: int) -> YPolynomial:
        """Apply y |-> y^l (so u |-> u^l); coefficients are unchanged."""
        if l < 1:
            raise ValueError(f"substitution power must be >= 1, got {l}")
        return YPolynomial({a * l: c for a, c in self.terms.items()})

    def invert_y(self) -> YPolynomial:
        """Apply y |-> 1/y, i.e. negate every u-exponent."""
        return YPolynomial({-a: c for a, c in self.terms.items()})

    # -- display -------------------------------------------------------------

    @staticmethod
    def _power_str(a: int) -> str:
        if a == 2:
            return "y"
        if a % 2 == 0:
            return f"y^{a // 2}"
        return f"y^({a}/2)"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for a, c in sorted(self.terms.items()):
            mag = -c if c < 0 else c
            if a == 0:
                body = str(mag)
            elif mag == 1:
                body = self._power_str(a)
            else:
                body = f"{mag}*{self._power_str(a)}"
            if not parts:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append((" - " if c < 0 else " + ") + body)
        return "".join(parts)

    def __repr__(self):
        return f"YPolynomial({{{', '.join(f'{a}: {c!r}' for a, c in self.pairs())}}})"


class QSeries:
    """Power series in q truncated at order ``trunc``, with YPolynomial coefficients.

    ``coeffs[k]`` is the coefficient of q^k; the list always has length
    trunc + 1.  Binary operations truncate to the minimum of the two orders,
    so precision can never silently inflate.

    >>> f = QSeries([1, 1], trunc=2)   # 1 + q, padded to order 2
    >>> str(f * f)
    'q^0: 1; q^1: 2; q^2: 1'
    """

    __slots__ = ("trunc", "coeffs")

    def __init__(self, coeffs=(), trunc=None):
        coeffs = [c if isinstance(c, YPolynomial) else YPolynomial.constant(c) for c in coeffs]
        if trunc is None:
            if not coeffs:
                raise ValueError("need coefficients or an explicit truncation order")
            trunc = len(coeffs) - 1
        if trunc < 0:
            raise ValueError(f"truncation order must be >= 0, got {trunc}")
        if len(coeffs) > trunc + 1:
            raise ValueError(f"{len(coeffs)} coefficients exceed truncation order {trunc}")
        coeffs.extend([YPolynomial.zero()] * (trunc + 1 - len(coeffs)))
        object.__setattr__(self, "trunc", trunc)
        object.__setattr__(self, "coeffs", tuple(coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("QSeries is immutable")

    # -- constructors ---------------------------------------------------------

    @classmethod
    def zero(cls, trunc: int) -> QSeries:
        return cls([], trunc)

    @classmethod
    def one(cls, trunc: int) -> QSeries:
        return cls([YPolynomial.one()], trunc)

    @classmethod
    def term(cls, coeff, power: int, trunc: int) -> QSeries:
        """The single term coeff * q^power, truncated at `trunc`."""
        if power > trunc:
            return cls.zero(trunc)
        coeffs = [YPolynomial.zero()] * power + [coeff if isinstance(coeff, YPolynomial) else YPolynomial.constant(coeff)]
        return cls(coeffs, trunc)

    # -- queries ---------------------------------------------------------------

    def coefficient(self, k: int) -> YPolynomial:
        if not 0 <= k <= self.trunc:
            raise ValueError(f"coefficient of q^{k} is outside the computed order {self.trunc}")
        return self.coeffs[k]

    def __eq__(self, other):
        if not isinstance(other, QSeries):
            return NotImplemented
        return self.trunc == other.trunc and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.trunc, self.coeffs))

    # -- arithmetic --------------------------------------------------------------

    @staticmethod
    def _scalar(value):
        if isinstance(value, YPolynomial):
            return value
        if isinstance(value, (int, Fraction)):
            return YPolynomial.constant(value)
        return None

    def __add__(self, other):
        if isinstance(other, QSeries):
            n = min(self.trunc, other.trunc)
            return QSeries([self.coeffs[k] + other.coeffs[k] for k in range(n + 1)], n)
        scalar = self._scalar(other)
        if scalar is None:
            return NotImplemented
        coeffs = list(self.coeffs)
        coeffs[0] = coeffs[0] + scalar
        return QSeries(coeffs, self.trunc)

    __radd__ = __add__

    def __neg__(self):
        return QSeries([-c for c in self.coeffs], self.trunc)

    def __sub__(self, other):
        if isinstance(other, QSeries):
            return self + (-other)
        scalar = self._scalar(other)
        if scalar is None:
            return NotImplemented
        return self + (-scalar)

    def __rsub__(self, other):
        scalar = self._scalar(other)
        if scalar is None:
            return NotImplemented
        return (-self) + scalar

    def __mul__(self, other):
        if isinstance(other, QSeries):
            n = min(self.trunc, other.trunc)
            out = [YPolynomial.zero()] * (n + 1)
            for i in range(min(self.trunc, n) + 1):
                a = self.coeffs[i]
                if a.is_zero():
                    continue
                for j in range(min(other.trunc, n - i) + 1):
                    b = other.coeffs[j]
                    if b.is_zero():
                        continue
                    out[i + j] = out[i + j] + a * b
            return QSeries(out, n)
        scalar = self._scalar(other)
        if scalar is None:
            return NotImplemented
        return QSeries([c * scalar for c in self.coeffs], self.trunc)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative series powers are not supported")
        result = QSeries.one(self.trunc)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- transcendental operations --------------------------------------------------

    def exp(self) -> QSeries:
        """Sum of self^k / k!; requires a vanishing constant term."""
        c0 = self.coeffs[0]
        if not c0.is_zero():
            raise ValueError(f"series exp needs zero constant term; the q^0 coefficient is {c0}")
        result = QSeries.one(self.trunc)
        power = QSeries.one(self.trunc)
        factorial = 1
        for k in range(1, self.trunc + 1):
            power = power * self
            factorial *= k
            result = result + power * Fraction(1, factorial)
        return result

    def log(self) -> QSeries:
        """Inverse of exp; requires constant term exactly 1."""
        if self.coeffs[0] != YPolynomial.one():
            raise ValueError(f"series log needs constant term 1; the q^0 coefficient is {self.coeffs[0]}")
        g = self - QSeries.one(self.trunc)
        result = QSeries.zero(self.trunc)
        power = QSeries.one(self.trunc)
        for k in range(1, self.trunc + 1):
            power = power * g
            result = result + power * Fraction((-1) ** (k + 1), k)
        return result

    # -- reindexing --------------------------------------------------------------------

    def stretch(self, l: int) -> QSeries:
        """Substitute q |-> q^l, keeping the truncation order."""
        if l < 1:
            raise ValueError(f"stretch factor must be >= 1, got {l}")
        if l == 1:
            return self
        out = [YPolynomial.zero()] * (self.trunc + 1)
        for j in range(self.trunc // l + 1):
            out[j * l] = self.coeffs[j]
        return QSeries(out, self.trunc)

    def truncate(self, n: int) -> QSeries:
        """Drop coefficients beyond q^n (n must not exceed the known order)."""
        if n > self.trunc:
            raise ValueError(f"cannot extend a series truncated at {self.trunc} to order {n}")
        return QSeries(list(self.coeffs[: n + 1]), n)

    def map_coefficients(self, fn) -> QSeries:
        return QSeries([fn(c) for c in self.coeffs], self.trunc)

    def at_y_one(self) -> QSeries:
        """Specialize y = 1 coefficientwise."""
        return self.map_coefficients(lambda c: YPolynomial.constant(c.at_one()))

    def __str__(self):
        return "; ".join(f"q^{k}: {c}" for k, c in enumerate(self.coeffs))

    def __repr__(self):
        return f"QSeries(trunc={self.trunc}, [{', '.join(str(c) for c in self.coeffs)}])"


def binomial_coefficient(c: int, n: int) -> int:
    """Coefficient of q^n in (1 - q)^(-c), for any integer c.

    For c >= 0 this is C(n + c - 1, n); for c < 0 it is the alternating
    binomial (-1)^n C(-c, n), which vanishes once n > -c.
    """
    if n < 0:
        raise ValueError("coefficient index must be >= 0")
    if c > 0:
        return math.comb(n + c - 1, n)
    if c == 0:
        return 1 if n == 0 else 0
    return (-1) ** n * math.comb(-c, n)


def binomial_power(c: int, trunc: int) -> QSeries:
    """Expansion of (1 - q)^(-c) through q^trunc, exact integer coefficients."""
    return QSeries([binomial_coefficient(c, n) for n in range(trunc + 1)], trunc)
