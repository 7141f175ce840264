"""Self-contained verification suites behind `symgen verify`.

Each suite pits a closed form against an independent brute-force route and
reports the first counterexample on failure.  All randomness is drawn from an
explicit seed, so reports are byte-deterministic.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import lru_cache

from .algebra import binomial_power
from .errors import VerificationError
from .genera import (
    POSITIVE_Y,
    chihat_sym_series,
    chiy_orb_delocalized,
    chiy_orb_series,
    chiy_sym_series,
    euler_orb_bruteforce,
    euler_orb_classsum,
    euler_orb_series,
    euler_sym_series,
)
from .hodge import HodgeDiamond, molien_average
from .ktheory import LineSymbol, adams, character_orbit_check, graded_adams, phi_cycle_tensor
from .lefschetz import (
    ModelManifold,
    chi_sigma_n,
    cyclic_local_term,
    graded_sym_sides,
    lambda_minus_y_bundle,
    orb_rr_sides,
    rr_number,
    scaling_homogeneity_sides,
    sym_rr_sides,
    bside_diamond_for_p1,
)


@dataclass
class SuiteResult:
    name: str
    passed: bool
    lines: list[str] = field(default_factory=list)
    counterexample: str | None = None

    def report(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        out = [f"{self.name}: {status}"]
        out.extend(f"  {line}" for line in self.lines)
        if self.counterexample:
            out.append(f"  counterexample: {self.counterexample}")
        return "\n".join(out)


def _fail(result: SuiteResult, counterexample: str):
    if result.passed:
        result.passed = False
        result.counterexample = counterexample


@lru_cache(maxsize=None)
def partition_count(n: int, max_part: int | None = None) -> int:
    """Independent recursive partition counter (no generating functions)."""
    if max_part is None:
        max_part = n
    if n == 0:
        return 1
    if max_part == 0:
        return 0
    total = 0
    for largest in range(1, min(n, max_part) + 1):
        total += partition_count(n - largest, largest)
    return total


# -- suites ------------------------------------------------------------------


def suite_macdonald(seed=0, max_n=5, **_) -> SuiteResult:
    """1/(1-q)^2 coefficients and the symmetric-square cross-check for the line."""
    result = SuiteResult("macdonald", True)
    series = euler_sym_series(2, max_n)
    expected = list(range(1, max_n + 2))
    got = [c.constant_term() for c in series.coeffs]
    if got != expected:
        _fail(result, f"euler_sym_series(2) gave {got}, expected {expected}")
    square = HodgeDiamond.p1().to_superspace().super_symmetric_power(2)
    if max_n >= 2 and square.euler_number() != got[2]:
        _fail(result, f"S^2 Euler number {square.euler_number()} != coefficient {got[2]}")
    result.lines.append(f"coefficients through q^{max_n}: {[int(v) for v in got]}")
    result.lines.append(f"Euler number of the symmetric square: {square.euler_number()}")
    return result


def suite_euler_brute(seed=0, max_n=5, **_) -> SuiteResult:
    """Commuting pairs vs class sum vs product formula for the line, n <= max_n."""
    result = SuiteResult("euler-brute", True)
    diamond = HodgeDiamond.p1()
    chi = diamond.euler_number()
    series = euler_orb_series(chi, max_n)
    for n in range(1, max_n + 1):
        brute = euler_orb_bruteforce(diamond, n)
        classes = euler_orb_classsum(chi, n)
        closed = series.coefficient(n).constant_term()
        if not (brute == classes == closed):
            _fail(
                result,
                f"n={n}: pairs {brute}, class sum {classes}, product formula {closed}",
            )
            break
        result.lines.append(f"n={n}: pairs = classes = closed form = {brute}")
    return result


def _random_diamond(rng) -> HodgeDiamond:
    d = rng.randint(0, 2)
    rows = [[0] * (d + 1) for _ in range(d + 1)]
    for _ in range(rng.randint(1, 4)):
        rows[rng.randint(0, d)][rng.randint(0, d)] += 1
    return HodgeDiamond(d, tuple(tuple(row) for row in rows))


def suite_oracle_sym(seed=0, samples=20, max_n=4, **_) -> SuiteResult:
    """Closed symmetric-product series vs basis enumeration vs Molien average."""
    result = SuiteResult("oracle-sym", True)
    rng = random.Random(seed)
    for index in range(samples):
        diamond = _random_diamond(rng)
        space = diamond.to_superspace()
        series = chiy_sym_series(diamond, max_n)
        for n in range(max_n + 1):
            power = space.super_symmetric_power(n)
            closed = series.coefficient(n)
            if closed != power.chi_minus_y():
                _fail(
                    result,
                    f"diamond #{index} {diamond.rows}, n={n}: closed form {closed} "
                    f"vs basis enumeration {power.chi_minus_y()}",
                )
                return result
            average = molien_average(diamond, n)
            if average != power.graded_dimension_poly():
                _fail(
                    result,
                    f"diamond #{index} {diamond.rows}, n={n}: Molien average {average} "
                    f"vs basis dimensions {power.graded_dimension_poly()}",
                )
                return result
    result.lines.append(f"{samples} random diamonds (dim <= 2, total dim <= 4), n <= {max_n}")
    result.lines.append("closed form = basis enumeration; Molien average = bigraded dimensions")
    return result


def suite_delocalized(seed=0, max_n=6, convention=POSITIVE_Y, **_) -> SuiteResult:
    """Delocalized class sum vs the closed orbifold series for the line."""
    result = SuiteResult("delocalized", True)
    diamond = HodgeDiamond.p1()
    series = chiy_orb_series(diamond, max_n)
    for n in range(max_n + 1):
        class_sum = chiy_orb_delocalized(diamond, n, convention=convention)
        closed = series.coefficient(n)
        if class_sum != closed:
            _fail(result, f"n={n}: class sum {class_sum} vs closed form {closed}")
            return result
    result.lines.append(f"class sum = closed form for n <= {max_n} ({convention})")
    result.lines.append(f"n=2 value: {chiy_orb_delocalized(diamond, 2, convention=convention)}")
    return result


def _adams_cases(max_rank, max_n, budget):
    for r in range(1, max_rank + 1):
        for n in range(1, max_n + 1):
            if r**n <= budget:
                yield r, n


def suite_adams(seed=0, max_rank=4, max_n=8, **_) -> SuiteResult:
    """Cyclic eigenbundle trace vs the Adams image, plus orbit block traces."""
    result = SuiteResult("adams", True)
    checked = orbit_checks = 0
    for r, n in _adams_cases(max_rank, max_n, 1_000_000):
        lines = [LineSymbol(i) for i in range(1, r + 1)]
        if phi_cycle_tensor(lines, n) != adams(lines, n):
            _fail(result, f"rank {r}, n={n}: trace {phi_cycle_tensor(lines, n)} vs {adams(lines, n)}")
            return result
        checked += 1
        if r**n <= 100_000:
            report = character_orbit_check(lines, n)
            if not report.nonfixed_traces_all_zero:
                bad = next(o for o in report.orbits if o.length > 1 and o.trace)
                _fail(result, f"rank {r}, n={n}: orbit {bad.representative} has trace {bad.trace}")
                return result
            orbit_checks += 1
    result.lines.append(f"all orbit traces zero; phi matches the Adams image for n <= {max_n}")
    result.lines.append(f"{checked} (rank, power) cases, {orbit_checks} orbit scans")
    return result


def suite_graded_adams(seed=0, max_rank=3, max_n=6, degrees=(0, 1, 2), **_) -> SuiteResult:
    """Signed eigenbundle trace vs the graded Adams image over small degree vectors."""
    result = SuiteResult("graded-adams", True)
    checked = 0
    for r in range(1, max_rank + 1):
        for degree_vector in _degree_vectors(degrees, r):
            lines = [LineSymbol(i + 1, degree_vector[i]) for i in range(r)]
            for n in range(1, max_n + 1):
                if phi_cycle_tensor(lines, n, graded=True) != graded_adams(lines, n):
                    _fail(
                        result,
                        f"degrees {degree_vector}, n={n}: "
                        f"{phi_cycle_tensor(lines, n, graded=True)} vs {graded_adams(lines, n)}",
                    )
                    return result
                report = character_orbit_check(lines, n, graded=True)
                if not report.nonfixed_traces_all_zero:
                    bad = next(o for o in report.orbits if o.length > 1 and o.trace)
                    _fail(
                        result,
                        f"degrees {degree_vector}, n={n}: orbit {bad.representative} "
                        f"has trace {bad.trace}",
                    )
                    return result
                checked += 1
    result.lines.append(
        f"signed traces match the graded Adams image for rank <= {max_rank}, n <= {max_n}, "
        f"degrees in {tuple(degrees)}"
    )
    result.lines.append(f"{checked} cases, all moving-orbit traces zero")
    return result


def _degree_vectors(degrees, r):
    if r == 0:
        yield ()
        return
    for rest in _degree_vectors(degrees, r - 1):
        for d in degrees:
            yield rest + (d,)


def suite_local_term(seed=0, max_d=3, max_n=5, max_trunc=6, **_) -> SuiteResult:
    """Telescoped geometric expansion vs the Todd-quotient local term."""
    result = SuiteResult("local-term", True)
    cells = 0
    for d in range(1, max_d + 1):
        for n in range(1, max_n + 1):
            for trunc in range(max_trunc + 1):
                lhs, rhs = cyclic_local_term(d, n, trunc)
                if lhs != rhs:
                    _fail(result, f"d={d}, n={n}, trunc={trunc}: {lhs} vs {rhs}")
                    return result
                cells += 1
    result.lines.append(f"lhs = rhs on {cells} cells (d <= {max_d}, n <= {max_n}, trunc <= {max_trunc})")
    return result


def suite_lemma_scaling(seed=0, max_n=6, **_) -> SuiteResult:
    """Cyclic-trace Riemann-Roch numbers equal plain ones; homogeneity check."""
    result = SuiteResult("lemma-scaling", True)
    cases = 0
    p1 = ModelManifold.projective(1)
    p2 = ModelManifold.projective(2)
    p1xp1 = ModelManifold.p1_power(2)
    bundles = [(p1, p1.line_bundle(k)) for k in range(-3, 4)]
    bundles += [(p2, p2.line_bundle(k)) for k in range(-3, 4)]
    bundles += [(p1xp1, p1xp1.line_bundle(a, b)) for a in range(-2, 3) for b in range(-2, 3)]
    for model, bundle in bundles:
        base = rr_number(model, bundle)
        for n in range(1, max_n + 1):
            value = chi_sigma_n(model, bundle, n)
            if value != base:
                _fail(
                    result,
                    f"{model.name}, bundle {bundle.summands[0].c1}, n={n}: "
                    f"{value} vs chi = {base}",
                )
                return result
            cases += 1
    for d in range(0, 4):
        for r in (1, 2):
            for n in range(1, 5):
                lhs, rhs = scaling_homogeneity_sides(d, r, n)
                if lhs != rhs:
                    _fail(result, f"homogeneity d={d}, r={r}, n={n}: {lhs} vs {rhs}")
                    return result
                cases += 1
    result.lines.append(f"{cases} instances: scaled trace = Riemann-Roch; degree-d scaling is n^d")
    return result


def suite_rr_series(seed=0, order=8, **_) -> SuiteResult:
    """Symmetric and orbifold Riemann-Roch series against their closed forms."""
    result = SuiteResult("rr-series", True)
    p1 = ModelManifold.projective(1)
    lhs, rhs = sym_rr_sides(p1, p1.line_bundle(1), order)
    if lhs != rhs:
        k_bad = next(k for k in range(order + 1) if lhs.coeffs[k] != rhs.coeffs[k])
        _fail(result, f"sym series q^{k_bad}: {lhs.coeffs[k_bad]} vs {rhs.coeffs[k_bad]}")
        return result
    expected = binomial_power(2, order)
    if lhs != expected:
        _fail(result, f"sym series {lhs} differs from (1-p)^-2")
        return result
    lhs_orb, rhs_orb = orb_rr_sides(p1, p1.line_bundle(0), order)
    if lhs_orb != rhs_orb:
        _fail(result, "orbifold series: cycle data differs from closed form")
        return result
    partitions = [partition_count(n) for n in range(order + 1)]
    got = [c.constant_term() for c in lhs_orb.coeffs]
    if got != partitions:
        _fail(result, f"orbifold series {got} differs from partition numbers {partitions}")
        return result
    result.lines.append(f"sym series on (p^1, O(1)) = (1-p)^-2 through p^{order}")
    result.lines.append(f"orb series on (p^1, O(0)) = partition numbers {partitions}")
    return result


def suite_graded_series(seed=0, order=5, **_) -> SuiteResult:
    """Graded cycle data vs closed form, tied back to the diamond pipelines."""
    result = SuiteResult("graded-series", True)
    p1 = ModelManifold.projective(1)
    cotangent = lambda_minus_y_bundle(p1, dual=True)
    lhs, rhs = graded_sym_sides(p1, cotangent, order)
    chiy = chiy_sym_series(HodgeDiamond.p1(), order)
    if lhs != rhs or lhs != chiy:
        _fail(result, f"exterior cotangent series {lhs} vs closed {rhs} vs diamond {chiy}")
        return result
    tangent = lambda_minus_y_bundle(p1, dual=False)
    lhs_t, rhs_t = graded_sym_sides(p1, tangent, order)
    chihat = chihat_sym_series(bside_diamond_for_p1(p1), order)
    if lhs_t != rhs_t or lhs_t != chihat:
        _fail(result, f"exterior tangent series {lhs_t} vs closed {rhs_t} vs diamond {chihat}")
        return result
    result.lines.append(f"Lambda_-y cotangent series = chi_y symmetric series through q^{order}")
    result.lines.append(f"Lambda_-y tangent series = chi-hat series (1 - 3y input) through q^{order}")
    return result


SUITES = {
    "adams": suite_adams,
    "delocalized": suite_delocalized,
    "euler-brute": suite_euler_brute,
    "graded-adams": suite_graded_adams,
    "graded-series": suite_graded_series,
    "lemma-scaling": suite_lemma_scaling,
    "local-term": suite_local_term,
    "macdonald": suite_macdonald,
    "oracle-sym": suite_oracle_sym,
    "rr-series": suite_rr_series,
}


def run_suite(name: str, **options) -> SuiteResult:
    """Run one suite; identity failures become a failed result, guards propagate."""
    try:
        return SUITES[name](**options)
    except VerificationError as err:
        return SuiteResult(name, False, counterexample=str(err))


def run_all(**options) -> list[SuiteResult]:
    """Run every suite, ordered by suite name (not completion order)."""
    return [run_suite(name, **options) for name in sorted(SUITES)]
