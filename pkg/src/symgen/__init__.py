"""Exact Hirzebruch chi_y genera of symmetric products and symmetric-group orbifolds.

Everything runs over exact rationals: Laurent polynomials in u = y^(1/2),
truncated q-series, cycle-type class sums, a toy Chern-root calculus, and
brute-force oracles for every closed form.
"""

from .algebra import QSeries, Rational, YPolynomial, binomial_coefficient, binomial_power
from .errors import (
    ConventionError,
    GuardError,
    HodgeParseError,
    SymgenError,
    VerificationError,
)
from .genera import (
    MINUS_Y,
    POSITIVE_Y,
    FermionicShift,
    GenusSeriesRequest,
    chihat_orb_delocalized,
    chihat_orb_series,
    chihat_sym_series,
    chiy_orb_delocalized,
    chiy_orb_series,
    chiy_sym_series,
    euler_orb_bruteforce,
    euler_orb_classsum,
    euler_orb_series,
    euler_sym_series,
    genus_series,
)
from .hodge import (
    THEORY_BSIDE,
    THEORY_HODGE,
    BidegreePolynomial,
    BigradedSuperSpace,
    HodgeDiamond,
    molien_average,
    molien_trace,
)
from .ktheory import (
    CharacterReport,
    KClass,
    LineSymbol,
    adams,
    character_orbit_check,
    graded_adams,
    phi_cycle_tensor,
)
from .lefschetz import (
    ModelBundle,
    ModelManifold,
    ModelSummand,
    MVSeries,
    bside_diamond_for_p1,
    chern_character,
    chi_minus_y_bundle,
    chi_sigma_n,
    cyclic_local_term,
    graded_chi_sigma,
    graded_sym_series,
    graded_sym_sides,
    lambda_minus_y_bundle,
    lambda_t,
    orb_rr_series,
    orb_rr_sides,
    rr_number,
    s_t,
    scaling_homogeneity_sides,
    sym_rr_series,
    sym_rr_sides,
    todd_class,
    todd_factor,
)
from .partitions import (
    CycleType,
    Permutation,
    all_permutations,
    commuting_pairs,
    joint_orbit_count,
    orbit_decomposition_on_words,
    partitions_of,
)

__version__ = "0.1.0"
