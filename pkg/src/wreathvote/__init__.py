"""Exact wreath-product analysis of structured-committee voting.

Committees pick one of m candidates in each of n departments; the package
provides the exact-rational machinery around them: the m^n-dimensional
committee space and its split into n+1 orthogonal components, the wreath
product of the department and candidate symmetries with its orbit
structure on full rankings, distance-weight ballot rules and their Schur
parameters, per-orbit position-weight ranking rules with effective-space
analysis, and constructive paradox profiles.

All arithmetic is exact (``fractions.Fraction``); nothing is ever
rounded.  ``KERNEL`` reports whether the compiled orbit-partition
extension or its pure-Python twin is in use.
"""

from .ballots import (
    BallotTally,
    DistanceWeights,
    NAMED_WEIGHT_RULES,
    RuleProfileAnalysis,
    SchurParameters,
    analyze_rule_on_profile,
    distance_weights,
    named_weights,
    schur_parameters,
    scoring_matrix,
    tally_committee_ballots,
)
from .caps import DIMENSION_CAP, FACTORIAL_CAP, GROUP_CAP
from .combinatorics import (
    KERNEL,
    Committee,
    OrbitInfo,
    Ranking,
    WreathElement,
    apply_wreath,
    apply_wreath_to_ranking,
    committee_index,
    committee_label,
    compose,
    disagreement,
    enumerate_committees,
    enumerate_group,
    enumerate_orbits,
    identity_element,
    inverse,
    orbit_count,
    orbit_members,
    orbit_of_ranking,
    ranking_orbit,
)
from .decomposition import (
    ComponentVector,
    DecompositionReport,
    DistanceProfile,
    borda_department_basis,
    component_dimension,
    component_spanning_set,
    component_vector,
    decompose_result,
    distance_profile,
)
from .errors import (
    DimensionMismatchError,
    InconsistentSystemError,
    InfeasibleError,
    NotScalarError,
    SizeGuardError,
    WreathvoteError,
)
from .paradox import (
    ParadoxInstance,
    ParadoxSolution,
    check_weight_independence,
    construct_paradox_profile,
    paradox_instance,
    verify_solution,
)
from .rankings import (
    EffectiveSpaceReport,
    OrbitWeights,
    RankingProfile,
    Weights2wr2Analysis,
    analyze_2wr2,
    decompose_position_weights,
    effective_space,
    parameter_count,
    permute_weights_identical,
    positional_scores,
    ranking_profile,
    ranking_scoring_row,
    tally_rankings,
    uniform_weights,
    weight_coordinates_2wr2,
)
from .ratlinalg import (
    Mat,
    Vec,
    as_matrix,
    as_rational,
    as_vector,
    dot,
    nullspace,
    project_onto_span,
    rank,
    solve,
)

__version__ = "0.1.0"
