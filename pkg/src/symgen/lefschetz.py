"""Truncated Chern-root calculus on toy model manifolds.

The universal identities verified here (Todd-quotient local terms, the
cyclic-trace Riemann-Roch scaling, and the graded variant) are polynomial
identities in Chern roots, so two small families of models with different
ring relations give strong instance coverage:

* ``p^d``   -- projective d-space: one class h with h^(d+1) = 0, tangent Todd
  roots h repeated d+1 times (Euler-sequence convention), integral = the
  h^d coefficient;
* ``p1^d``  -- a product of d projective lines: classes h_i with h_i^2 = 0,
  tangent roots 2 h_i, integral = the h_1...h_d coefficient.

Root-of-unity arithmetic never appears: the equivariant exterior-class
product over the nontrivial rotation eigenvalues telescopes to
(1 - e^(-nx))/(1 - e^(-x)) = 1 + e^(-x) + ... + e^(-(n-1)x), which is what
``cyclic_local_term`` expands directly against the Todd-quotient form.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from fractions import Fraction

from .algebra import QSeries, YPolynomial, binomial_power
from .errors import GuardError, VerificationError
from .hodge import HodgeDiamond

MAX_LOCAL_DIM = 4
MAX_LOCAL_POWER = 6
MAX_LOCAL_TRUNC = 8
MAX_SERIES_ORDER = 12


class MVSeries:
    """Multivariate power series, truncated at a total degree, over YPolynomial.

    Terms map an exponent vector (one slot per variable) to a nonzero
    coefficient; any term of total degree beyond ``trunc`` is dropped on
    construction.  Binary operations require identical variable tuples and
    truncate to the smaller order.
    """

    __slots__ = ("names", "trunc", "terms")

    def __init__(self, names, terms=None, trunc=0):
        names = tuple(names)
        if trunc < 0:
            raise ValueError(f"truncation must be >= 0, got {trunc}")
        clean = {}
        if terms:
            for exps, coeff in terms.items():
                exps = tuple(int(e) for e in exps)
                if len(exps) != len(names):
                    raise ValueError(f"exponent vector {exps} does not match variables {names}")
                if any(e < 0 for e in exps):
                    raise ValueError(f"exponents must be >= 0, got {exps}")
                if sum(exps) > trunc:
                    continue
                if not isinstance(coeff, YPolynomial):
                    coeff = YPolynomial.constant(coeff)
                if not coeff.is_zero():
                    clean[exps] = coeff
        object.__setattr__(self, "names", names)
        object.__setattr__(self, "trunc", trunc)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("MVSeries is immutable")

    # -- constructors --------------------------------------------------------

    @classmethod
    def zero(cls, names, trunc) -> MVSeries:
        return cls(names, {}, trunc)

    @classmethod
    def constant(cls, names, value, trunc) -> MVSeries:
        zero_exp = (0,) * len(names)
        return cls(names, {zero_exp: value}, trunc)

    @classmethod
    def one(cls, names, trunc) -> MVSeries:
        return cls.constant(names, 1, trunc)

    @classmethod
    def linear(cls, names, coeffs, trunc) -> MVSeries:
        """The linear form sum_i coeffs[i] * names[i]."""
        names = tuple(names)
        coeffs = tuple(coeffs)
        if len(coeffs) != len(names):
            raise ValueError("one coefficient per variable required")
        terms = {}
        for i, c in enumerate(coeffs):
            if c:
                exps = tuple(1 if j == i else 0 for j in range(len(names)))
                terms[exps] = c
        return cls(names, terms, trunc)

    # -- queries ----------------------------------------------------------------

    def coefficient(self, exps) -> YPolynomial:
        return self.terms.get(tuple(exps), YPolynomial.zero())

    def constant_term(self) -> YPolynomial:
        return self.coefficient((0,) * len(self.names))

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, MVSeries):
            return NotImplemented
        return self.names == other.names and self.trunc == other.trunc and self.terms == other.terms

    def __hash__(self):
        return hash((self.names, self.trunc, tuple(sorted(self.terms.items()))))

    # -- arithmetic ----------------------------------------------------------------

    def _check_compatible(self, other):
        if self.names != other.names:
            raise ValueError(f"variable mismatch: {self.names} vs {other.names}")

    @staticmethod
    def _scalar(value):
        if isinstance(value, YPolynomial):
            return value
        if isinstance(value, (int, Fraction)):
            return YPolynomial.constant(value)
        return None

    def __add__(self, other):
        if isinstance(other, MVSeries):
            self._check_compatible(other)
            n = min(self.trunc, other.trunc)
            out = {e: c for e, c in self.terms.items() if sum(e) <= n}
            for e, c in other.terms.items():
                if sum(e) > n:
                    continue
                s = out.get(e, YPolynomial.zero()) + c
                if s.is_zero():
                    out.pop(e, None)
                else:
                    out[e] = s
            return MVSeries(self.names, out, n)
        scalar = self._scalar(other)
        if scalar is None:
            return NotImplemented
        return self + MVSeries.constant(self.names, scalar, self.trunc)

    __radd__ = __add__

    def __neg__(self):
        return MVSeries(self.names, {e: -c for e, c in self.terms.items()}, self.trunc)

    def __sub__(self, other):
        if isinstance(other, MVSeries):
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
        if isinstance(other, MVSeries):
            self._check_compatible(other)
            n = min(self.trunc, other.trunc)
            out = {}
            for e1, c1 in self.terms.items():
                d1 = sum(e1)
                if d1 > n:
                    continue
                for e2, c2 in other.terms.items():
                    if d1 + sum(e2) > n:
                        continue
                    key = tuple(a + b for a, b in zip(e1, e2))
                    s = out.get(key, YPolynomial.zero()) + c1 * c2
                    if s.is_zero():
                        out.pop(key, None)
                    else:
                        out[key] = s
            return MVSeries(self.names, out, n)
        scalar = self._scalar(other)
        if scalar is None:
            return NotImplemented
        return MVSeries(self.names, {e: c * scalar for e, c in self.terms.items()}, self.trunc)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("use inverse() for negative powers")
        result = MVSeries.one(self.names, self.trunc)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def exp(self) -> MVSeries:
        if not self.constant_term().is_zero():
            raise ValueError(f"exp needs zero constant term, found {self.constant_term()}")
        result = MVSeries.one(self.names, self.trunc)
        power = MVSeries.one(self.names, self.trunc)
        factorial = 1
        for k in range(1, self.trunc + 1):
            power = power * self
            factorial *= k
            result = result + power * Fraction(1, factorial)
        return result

    def inverse(self) -> MVSeries:
        """Multiplicative inverse; the constant term must be a unit (a u-monomial)."""
        c = self.constant_term()
        c_inv = c.inverse()  # raises when c is not a monomial unit
        normalized = self * c_inv
        g = MVSeries.one(self.names, self.trunc) - normalized
        acc = MVSeries.one(self.names, self.trunc)
        power = MVSeries.one(self.names, self.trunc)
        for _ in range(self.trunc):
            power = power * g
            if power.is_zero():
                break
            acc = acc + power
        return acc * c_inv

    def __truediv__(self, other):
        if isinstance(other, MVSeries):
            return self * other.inverse()
        scalar = self._scalar(other)
        if scalar is None:
            return NotImplemented
        return self * scalar.inverse()

    # -- structure maps ---------------------------------------------------------------

    def degree_component(self, k: int) -> MVSeries:
        return MVSeries(self.names, {e: c for e, c in self.terms.items() if sum(e) == k}, self.trunc)

    def scale_variables(self, factor: int) -> MVSeries:
        """Substitute every variable v |-> factor * v."""
        return MVSeries(
            self.names, {e: c * Fraction(factor) ** sum(e) for e, c in self.terms.items()}, self.trunc
        )

    def __str__(self):
        if not self.terms:
            return "0"
        bits = []
        for exps in sorted(self.terms, key=lambda e: (sum(e), e)):
            c = self.terms[exps]
            mono = "*".join(
                f"{v}^{e}" if e > 1 else v for v, e in zip(self.names, exps) if e
            )
            cs = str(c)
            needs_parens = ("+" in cs or " - " in cs) and mono
            cs = f"({cs})" if needs_parens else cs
            bits.append(f"{cs}*{mono}" if mono else cs)
        return " + ".join(bits)

    def __repr__(self):
        return f"MVSeries({self.names}, trunc={self.trunc}, {len(self.terms)} terms)"


# -- characteristic-class expansions ------------------------------------------


def todd_factor(root: MVSeries) -> MVSeries:
    """x / (1 - e^(-x)) for a single Chern root x (any linear form).

    Expanded by inverting (1 - e^(-x))/x = sum_k (-x)^k/(k+1)!, which is a
    unit series; no division by the non-unit x is ever needed.
    """
    s = MVSeries.zero(root.names, root.trunc)
    power = MVSeries.one(root.names, root.trunc)
    for k in range(root.trunc + 1):
        s = s + power * Fraction((-1) ** k, math.factorial(k + 1))
        power = power * root
    return s.inverse()


def todd_class(roots, trunc=None) -> MVSeries:
    """Product of Todd factors over a list of Chern roots (linear MVSeries)."""
    roots = list(roots)
    if not roots:
        return MVSeries.one((), 0 if trunc is None else trunc)
    if trunc is not None:
        roots = [MVSeries(r.names, r.terms, trunc) for r in roots]
    result = MVSeries.one(roots[0].names, roots[0].trunc)
    for root in roots:
        result = result * todd_factor(root)
    return result


def lambda_t(roots, t, trunc=None) -> MVSeries:
    """Total exterior class prod_j (1 + t e^(x_j)) on a sum of line bundles."""
    roots = list(roots)
    if not roots:
        return MVSeries.one((), 0 if trunc is None else trunc)
    if trunc is not None:
        roots = [MVSeries(r.names, r.terms, trunc) for r in roots]
    result = MVSeries.one(roots[0].names, roots[0].trunc)
    for root in roots:
        result = result * (MVSeries.one(root.names, root.trunc) + root.exp() * t)
    return result


def s_t(roots, t, trunc=None) -> MVSeries:
    """Total symmetric class prod_j 1/(1 - t e^(x_j)); needs 1 - t invertible."""
    roots = list(roots)
    if not roots:
        return MVSeries.one((), 0 if trunc is None else trunc)
    if trunc is not None:
        roots = [MVSeries(r.names, r.terms, trunc) for r in roots]
    result = MVSeries.one(roots[0].names, roots[0].trunc)
    for root in roots:
        factor = MVSeries.one(root.names, root.trunc) - root.exp() * t
        result = result * factor.inverse()
    return result


def cyclic_local_term(d: int, n: int, trunc: int):
    """Both routes to the equivariant normal-bundle local term of the long cycle.

    Returns (lhs, rhs) where lhs expands prod_j (1 + e^(-x_j) + ... +
    e^(-(n-1) x_j)) directly, and rhs is n^d * Todd(x) / Todd(n x); the two
    must agree as truncated series.
    """
    if d > MAX_LOCAL_DIM or n > MAX_LOCAL_POWER or trunc > MAX_LOCAL_TRUNC:
        raise GuardError(
            f"local term guarded at d <= {MAX_LOCAL_DIM}, n <= {MAX_LOCAL_POWER}, "
            f"trunc <= {MAX_LOCAL_TRUNC}; got d={d}, n={n}, trunc={trunc}"
        )
    if d < 1 or n < 1:
        raise ValueError("need d >= 1 and n >= 1")
    names = tuple(f"x{j}" for j in range(1, d + 1))
    roots = [
        MVSeries.linear(names, tuple(1 if i == j else 0 for i in range(d)), trunc)
        for j in range(d)
    ]
    lhs = MVSeries.one(names, trunc)
    for root in roots:
        geom = MVSeries.zero(names, trunc)
        for k in range(n):
            geom = geom + (root * (-k)).exp()
        lhs = lhs * geom
    todd_plain = todd_class(roots)
    todd_scaled = todd_class([root * n for root in roots])
    rhs = todd_plain * todd_scaled.inverse() * Fraction(n) ** d
    return lhs, rhs


# -- toy model manifolds ----------------------------------------------------------


@dataclass(frozen=True)
class ModelManifold:
    """A toy cohomology ring with Todd data and an integration functional."""

    name: str
    dim: int
    variables: tuple[str, ...]
    todd_roots: tuple[tuple[int, ...], ...]
    var_caps: tuple[int, ...]
    top_monomial: tuple[int, ...]

    @classmethod
    def projective(cls, d: int) -> ModelManifold:
        """p^d: one class h with h^(d+1) = 0; Todd roots h, d+1 times."""
        if d < 0:
            raise ValueError("dimension must be >= 0")
        if d == 0:
            return cls("p^0", 0, (), (), (), ())
        return cls(f"p^{d}", d, ("h",), ((1,),) * (d + 1), (d,), (d,))

    @classmethod
    def p1_power(cls, d: int) -> ModelManifold:
        """p1^d: classes h_i with h_i^2 = 0; Todd roots 2 h_i."""
        if d < 1:
            raise ValueError("p1^d needs d >= 1")
        names = tuple(f"h{i}" for i in range(1, d + 1))
        roots = tuple(tuple(2 if j == i else 0 for j in range(d)) for i in range(d))
        return cls(f"p1^{d}", d, names, roots, (1,) * d, (1,) * d)

    @classmethod
    def from_name(cls, name: str) -> ModelManifold:
        """Parse "p^<d>" or "p1^<d>"."""
        base, sep, power = name.partition("^")
        if not sep or not power.isdigit():
            raise ValueError(f"unknown model {name!r}; expected p^<d> or p1^<d>")
        d = int(power)
        if base == "p":
            return cls.projective(d)
        if base == "p1":
            return cls.p1_power(d)
        raise ValueError(f"unknown model family {base!r}; expected p or p1")

    # -- ring operations ----------------------------------------------------------

    def reduce(self, series: MVSeries) -> MVSeries:
        """Apply the ring relations by dropping monomials beyond the caps."""
        kept = {
            e: c
            for e, c in series.terms.items()
            if all(exp <= cap for exp, cap in zip(e, self.var_caps))
        }
        return MVSeries(self.variables, kept, series.trunc)

    def zero_series(self) -> MVSeries:
        return MVSeries.zero(self.variables, self.dim)

    def exp_c1(self, c1, scale: int = 1) -> MVSeries:
        """e^(scale * c1) in the model ring, for a first Chern class vector."""
        form = MVSeries.linear(self.variables, tuple(scale * c for c in c1), self.dim)
        return self.reduce(form.exp())

    def todd(self, scale: int = 1) -> MVSeries:
        """Todd class of the tangent bundle, with roots scaled for Adams images."""
        result = MVSeries.one(self.variables, self.dim)
        for root in self.todd_roots:
            form = MVSeries.linear(self.variables, tuple(scale * c for c in root), self.dim)
            result = self.reduce(result * todd_factor(form))
        return result

    def integrate(self, series: MVSeries) -> YPolynomial:
        """Coefficient of the top monomial (the fundamental-class pairing)."""
        return series.coefficient(self.top_monomial)

    # -- bundles ---------------------------------------------------------------------

    def line_bundle(self, *c1, degree: int = 0) -> ModelBundle:
        """O(c1) as a one-summand bundle; a single integer broadcasts to all factors."""
        if len(c1) == 1 and len(self.variables) != 1:
            c1 = c1 * len(self.variables)
        if len(c1) != len(self.variables):
            raise ValueError(
                f"{self.name} needs {len(self.variables)} twisting integers, got {len(c1)}"
            )
        return ModelBundle(self, (ModelSummand(tuple(c1), degree),))

    def trivial_bundle(self, degree: int = 0) -> ModelBundle:
        return ModelBundle(self, (ModelSummand((0,) * len(self.variables), degree),))


@dataclass(frozen=True)
class ModelSummand:
    """One formal line summand: a first Chern class vector and a grading degree."""

    c1: tuple[int, ...]
    degree: int = 0

    def __post_init__(self):
        object.__setattr__(self, "c1", tuple(int(c) for c in self.c1))


@dataclass(frozen=True)
class ModelBundle:
    """A formal sum of line bundles on a model manifold."""

    model: ModelManifold
    summands: tuple[ModelSummand, ...]

    def __post_init__(self):
        object.__setattr__(self, "summands", tuple(self.summands))
        for s in self.summands:
            if len(s.c1) != len(self.model.variables):
                raise ValueError(
                    f"summand {s.c1} does not match the {len(self.model.variables)} "
                    f"classes of {self.model.name}"
                )

    @property
    def rank(self) -> int:
        return len(self.summands)

    def is_graded(self) -> bool:
        return any(s.degree for s in self.summands)

    def __add__(self, other: ModelBundle) -> ModelBundle:
        if self.model != other.model:
            raise ValueError("bundles live on different models")
        return ModelBundle(self.model, self.summands + other.summands)

    def adams(self, n: int) -> ModelBundle:
        """Adams image: each line O(c1) becomes O(n * c1)."""
        if n < 1:
            raise ValueError(f"Adams power must be >= 1, got {n}")
        return ModelBundle(
            self.model,
            tuple(ModelSummand(tuple(n * c for c in s.c1), s.degree) for s in self.summands),
        )

    def line(self, index: int) -> ModelBundle:
        return ModelBundle(self.model, (self.summands[index],))


def lambda_minus_y_bundle(model: ModelManifold, dual: bool = True) -> ModelBundle:
    """The graded exterior algebra of the (co)tangent bundle as a line sum.

    Defined where the (co)tangent bundle is honestly a sum of lines: on p^1
    (tangent O(2)) and on p1^d (tangent O(2) on each factor).  The exterior
    degree is the grading degree of each summand.
    """
    twist = -2 if dual else 2
    if model.name == "p^0":
        return model.trivial_bundle()
    if model.name == "p^1":
        return ModelBundle(
            model, (ModelSummand((0,), 0), ModelSummand((twist,), 1))
        )
    if model.name.startswith("p1^"):
        d = model.dim
        summands = []
        for mask in range(1 << d):
            c1 = tuple(twist if mask >> i & 1 else 0 for i in range(d))
            summands.append(ModelSummand(c1, bin(mask).count("1")))
        return ModelBundle(model, tuple(summands))
    raise ValueError(
        f"the exterior algebra of the tangent bundle of {model.name} is not a sum of lines"
    )


# -- Riemann-Roch numbers -------------------------------------------------------------


def chern_character(bundle: ModelBundle, trunc=None) -> MVSeries:
    """sum of e^(c1) over the line summands, in the model ring."""
    model = bundle.model
    total = MVSeries.zero(model.variables, model.dim if trunc is None else trunc)
    for s in bundle.summands:
        form = MVSeries.linear(model.variables, s.c1, total.trunc)
        total = total + model.reduce(form.exp())
    return total


def _as_number(value: YPolynomial, what: str) -> Fraction:
    if not value.is_constant():
        raise ValueError(f"{what} produced a y-dependent value {value}; expected a number")
    return value.constant_term()


def rr_number(model: ModelManifold, bundle: ModelBundle) -> Fraction:
    """Riemann-Roch number: the integral of ch(E) * Todd(X).

    Always returns the exact rational; a non-integer value signals a modeling
    error and is flagged with a warning rather than silently accepted.
    """
    integrand = model.reduce(chern_character(bundle) * model.todd())
    value = _as_number(model.integrate(integrand), "rr_number")
    if value.denominator != 1:
        warnings.warn(f"Riemann-Roch number {value} is not an integer; check the model data")
    return value


def chi_sigma_n(model: ModelManifold, bundle: ModelBundle, n: int) -> Fraction:
    """Lefschetz number of the long cycle on the n-th external power.

    Evaluates (1/n^d) * integral of ch(psi^n E) * Todd(psi^n TX); by the
    cyclic-trace scaling identity this equals the plain Riemann-Roch number,
    but it is computed here by the scaled-root route so the equality stays a
    cross-check.
    """
    if n < 1:
        raise ValueError(f"cycle length must be >= 1, got {n}")
    model_dim = model.dim
    ch = MVSeries.zero(model.variables, model_dim)
    for s in bundle.summands:
        ch = ch + model.exp_c1(s.c1, scale=n)
    integrand = model.reduce(ch * model.todd(scale=n))
    value = _as_number(model.integrate(integrand), "chi_sigma_n")
    return value * Fraction(1, n**model_dim)


def chi_minus_y_bundle(model: ModelManifold, bundle: ModelBundle, power: int = 1) -> YPolynomial:
    """chi_{-y^power}(X, E) = sum_i (-y^power)^(d_i) chi(X, L_i) for a graded line sum."""
    total = YPolynomial.zero()
    for s in bundle.summands:
        chi_line = rr_number(model, ModelBundle(model, (ModelSummand(s.c1, 0),)))
        weight = YPolynomial.u_power(2 * power * s.degree, (-1) ** s.degree)
        total = total + weight * YPolynomial.constant(chi_line)
    return total


def graded_chi_sigma(model: ModelManifold, bundle: ModelBundle, n: int) -> YPolynomial:
    """Lefschetz number of the long cycle acting graded-antisymmetrically.

    Uses the graded Adams image of the y-weighted bundle: summand L_i of
    degree d_i enters with sign (-1)^((n-1) d_i) from the Koszul rule times
    the weight (-y)^(n d_i), Chern class scaled by n, against Todd(psi^n TX),
    normalized by n^d.
    """
    if n < 1:
        raise ValueError(f"cycle length must be >= 1, got {n}")
    total = model.zero_series()
    for s in bundle.summands:
        sign = (-1) ** ((n - 1) * s.degree) * (-1) ** (n * s.degree)
        weight = YPolynomial.u_power(2 * n * s.degree, sign)
        total = total + model.exp_c1(s.c1, scale=n) * weight
    integrand = model.reduce(total * model.todd(scale=n))
    return model.integrate(integrand) * Fraction(1, n**model.dim)


# -- generating series, cycle data vs closed form ----------------------------------------


def _require_integer(value: Fraction, what: str) -> int:
    if value.denominator != 1:
        raise ValueError(f"{what} = {value} is not an integer")
    return int(value)


def _first_mismatch(lhs: QSeries, rhs: QSeries):
    for k in range(min(lhs.trunc, rhs.trunc) + 1):
        if lhs.coeffs[k] != rhs.coeffs[k]:
            return k
    return None


def _asserted(lhs: QSeries, rhs: QSeries, what: str) -> QSeries:
    k = _first_mismatch(lhs, rhs)
    if k is not None:
        raise VerificationError(
            f"{what}: q^{k} coefficient differs: cycle data gives {lhs.coeffs[k]}, "
            f"closed form gives {rhs.coeffs[k]}"
        )
    return lhs


def _check_order(order: int):
    if not 0 <= order <= MAX_SERIES_ORDER:
        raise GuardError(f"series order guarded at {MAX_SERIES_ORDER}, got {order}")


def sym_rr_sides(model: ModelManifold, bundle: ModelBundle, order: int):
    """Symmetric-power Riemann-Roch series two ways.

    Cycle side: exp(sum_l p^l/l * chi_sigma_l); closed side: 1/(1-p)^chi(X,E).
    """
    _check_order(order)
    arg = QSeries.zero(order)
    for l in range(1, order + 1):
        arg = arg + QSeries.term(Fraction(1, l) * chi_sigma_n(model, bundle, l), l, order)
    lhs = arg.exp()
    chi = _require_integer(rr_number(model, bundle), "chi(X, E)")
    rhs = binomial_power(chi, order)
    return lhs, rhs


def sym_rr_series(model: ModelManifold, bundle: ModelBundle, order: int) -> QSeries:
    lhs, rhs = sym_rr_sides(model, bundle, order)
    return _asserted(lhs, rhs, f"symmetric-power series on {model.name}")


def orb_rr_sides(model: ModelManifold, bundle: ModelBundle, order: int):
    """Orbifold Riemann-Roch series two ways.

    Cycle side: exp over cycle lengths l and multiplicities m of
    p^(lm)/m * chi_sigma_m(psi^l E); closed side:
    prod_l 1/(1 - p^l)^chi(X, psi^l E).
    """
    _check_order(order)
    arg = QSeries.zero(order)
    for l in range(1, order + 1):
        adams_bundle = bundle.adams(l)
        for m in range(1, order // l + 1):
            arg = arg + QSeries.term(
                Fraction(1, m) * chi_sigma_n(model, adams_bundle, m), l * m, order
            )
    lhs = arg.exp()
    rhs = QSeries.one(order)
    for l in range(1, order + 1):
        chi_l = _require_integer(rr_number(model, bundle.adams(l)), f"chi(X, psi^{l} E)")
        rhs = rhs * binomial_power(chi_l, order).stretch(l)
    return lhs, rhs


def orb_rr_series(model: ModelManifold, bundle: ModelBundle, order: int) -> QSeries:
    lhs, rhs = orb_rr_sides(model, bundle, order)
    return _asserted(lhs, rhs, f"orbifold series on {model.name}")


def graded_sym_sides(model: ModelManifold, bundle: ModelBundle, order: int):
    """Graded symmetric-power series two ways.

    Cycle side: exp(sum_l p^l/l * graded chi_sigma_l); closed side:
    exp(sum_l p^l/l * chi_{-y^l}(X, E)) built from per-line Riemann-Roch
    numbers and grading weights only.
    """
    _check_order(order)
    arg_cycle = QSeries.zero(order)
    arg_closed = QSeries.zero(order)
    for l in range(1, order + 1):
        arg_cycle = arg_cycle + QSeries.term(
            graded_chi_sigma(model, bundle, l) * Fraction(1, l), l, order
        )
        arg_closed = arg_closed + QSeries.term(
            chi_minus_y_bundle(model, bundle, l) * Fraction(1, l), l, order
        )
    return arg_cycle.exp(), arg_closed.exp()


def graded_sym_series(model: ModelManifold, bundle: ModelBundle, order: int) -> QSeries:
    lhs, rhs = graded_sym_sides(model, bundle, order)
    return _asserted(lhs, rhs, f"graded symmetric-power series on {model.name}")


def scaling_homogeneity_sides(d: int, r: int, n: int):
    """Both sides of the degree-d homogeneity of ch(E) * Todd(TX).

    In free Chern roots x_1..x_d (tangent) and b_1..b_r (bundle), scaling all
    roots by n multiplies the degree-d component by n^d; returns the scaled
    component and n^d times the unscaled one.
    """
    if d < 0 or r < 1 or n < 1:
        raise ValueError("need d >= 0, r >= 1, n >= 1")
    names = tuple(f"x{j}" for j in range(1, d + 1)) + tuple(f"b{i}" for i in range(1, r + 1))
    nv = len(names)
    ch = MVSeries.zero(names, d)
    for i in range(r):
        form = MVSeries.linear(names, tuple(1 if j == d + i else 0 for j in range(nv)), d)
        ch = ch + form.exp()
    td = MVSeries.one(names, d)
    for j in range(d):
        root = MVSeries.linear(names, tuple(1 if i == j else 0 for i in range(nv)), d)
        td = td * todd_factor(root)
    full = ch * td
    lhs = full.scale_variables(n).degree_component(d)
    rhs = full.degree_component(d) * Fraction(n) ** d
    return lhs, rhs


def bside_diamond_for_p1(model: ModelManifold | None = None) -> HodgeDiamond:
    """The polyvector table of the projective line, with h^{-1,0} from Riemann-Roch.

    dim H^0(P^1, T) = chi(P^1, O(2)) = 3 because the higher cohomology of
    O(2) vanishes; Riemann-Roch on the model supplies the 3.
    """
    model = model or ModelManifold.projective(1)
    h10 = _require_integer(rr_number(model, model.line_bundle(2)), "chi(P^1, O(2))")
    return HodgeDiamond(1, ((1, 0), (h10, 0)), theory="b-side")
