"""Ranking-ballot rules with independent position weights per orbit.

A full-ranking rule assigns points by ballot position, but nothing forces
the same point vector on structurally different ballots: rankings fall
into orbits under the committee symmetries, and each orbit may carry its
own length-m^n weight vector.  A general rule therefore has
(m^n)! m^n / ((m!)^n n!) free parameters.

``effective_space`` computes, per orbit, the rank of the scoring block,
its kernel dimension, the surviving row space in profile coordinates,
and the image inside the committee space together with that image's
split across the irreducible components.  ``analyze_2wr2`` specialises
to m = n = 2, where the per-orbit behaviour is read off the coordinates
of each weight vector in the basis {[1,1,1,1], [1,-1,-1,1], [1,0,0,-1],
[0,1,-1,0]} and cross-checked against the measured ranks.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction

from . import caps
from .ballots import BallotTally, _argmax
from .combinatorics import (
    Ranking,
    _check_ranking,
    _orbit_partition,
    enumerate_orbits,
    orbit_of_ranking,
)
from .decomposition import DecompositionReport, decompose_result
from .errors import DimensionMismatchError
from .ratlinalg import Vec, as_vector, rank, rref, transpose

_zero = Fraction(0)


@dataclass(frozen=True)
class OrbitWeights:
    """One position-weight vector per orbit id, plus a default.

    The default covers every orbit absent from the map, so rules like
    "Borda on one orbit, zero elsewhere" need not enumerate the rest.
    """

    m: int
    n: int
    default: Vec
    by_orbit: dict[int, Vec] = field(default_factory=dict)

    def __post_init__(self):
        dim = self.m**self.n
        if len(self.default) != dim:
            raise DimensionMismatchError(f"default weight vector must have length {dim}")
        for oid, w in self.by_orbit.items():
            if len(w) != dim:
                raise DimensionMismatchError(f"weight vector for orbit {oid} must have length {dim}")

    def weight_for(self, orbit_id: int) -> Vec:
        return self.by_orbit.get(orbit_id, self.default)


@dataclass(frozen=True)
class RankingProfile:
    """Sparse profile: rational (possibly negative) multiplicity per ranking."""

    m: int
    n: int
    votes: dict[Ranking, Fraction]


def uniform_weights(m: int, n: int, w) -> OrbitWeights:
    """The classical single-vector rule: the same weights in every orbit."""
    return OrbitWeights(m=m, n=n, default=as_vector(w))


def ranking_profile(m: int, n: int, votes) -> RankingProfile:
    dim = caps.guard_dimension(m, n)
    converted = {}
    for ranking, count in dict(votes).items():
        r = tuple(ranking)
        if sorted(r) != list(range(dim)):
            raise DimensionMismatchError(f"{r} is not a ranking of all {dim} committees")
        c = Fraction(count)
        if c != 0:
            converted[r] = c
    return RankingProfile(m=m, n=n, votes=converted)


def positional_scores(m: int, n: int, w: Vec, votes: dict[Ranking, Fraction]) -> Vec:
    """Classical positional tally: committee r[pos] earns w[pos] per vote."""
    dim = m**n
    scores = [_zero] * dim
    for ranking, count in votes.items():
        for pos, committee in enumerate(ranking):
            scores[committee] += count * w[pos]
    return tuple(scores)


def ranking_scoring_row(
    ow: OrbitWeights,
    ranking: Ranking,
    fact_cap: int = caps.FACTORIAL_CAP,
    group_cap: int = caps.GROUP_CAP,
) -> Vec:
    """Points each committee receives from one ballot with this ranking."""
    dim = caps.guard_dimension(ow.m, ow.n)
    _check_ranking(dim, ranking)
    if ow.by_orbit:
        info = orbit_of_ranking(ow.m, ow.n, ranking, fact_cap, group_cap)
        w = ow.weight_for(info.id)
    else:
        w = ow.default
    row = [_zero] * dim
    for pos, committee in enumerate(ranking):
        row[committee] = w[pos]
    return tuple(row)


def tally_rankings(
    ow: OrbitWeights,
    profile: RankingProfile,
    fact_cap: int = caps.FACTORIAL_CAP,
    group_cap: int = caps.GROUP_CAP,
) -> BallotTally:
    """Score all committees under per-orbit position weights."""
    if (ow.m, ow.n) != (profile.m, profile.n):
        raise DimensionMismatchError("weights and profile built for different (m, n)")
    dim = ow.m**ow.n
    scores = [_zero] * dim
    for ranking, count in profile.votes.items():
        row = ranking_scoring_row(ow, ranking, fact_cap, group_cap)
        for c in range(dim):
            if row[c] != 0:
                scores[c] += count * row[c]
    scores = tuple(scores)
    return BallotTally(scores=scores, winners=_argmax(scores))


def parameter_count(m: int, n: int) -> int:
    """Free parameters of a general per-orbit ranking rule: orbits times m^n."""
    if m < 1 or n < 1:
        raise ValueError(f"need m >= 1 and n >= 1, got m={m}, n={n}")
    if m == 1:
        return 1
    return math.factorial(m**n) * m**n // (math.factorial(m) ** n * math.factorial(n))


def decompose_position_weights(m: int, n: int, w) -> DecompositionReport:
    """Component split of a position-weight vector viewed in committee space.

    Positions are identified with committees via the lexicographic order,
    turning the weights themselves into the object being decomposed.
    """
    return decompose_result(m, n, as_vector(w))


def permute_weights_identical(w) -> tuple[Vec, Vec, Vec]:
    """Move one m=n=2 weight vector into all three orbits compatibly.

    Undoing the position permutations that distinguish the orbits gives
    identical effective spaces: (a,b,c,d) stays put on the first orbit,
    becomes (a,c,d,b) on the second and (a,d,c,b) on the third.
    """
    v = as_vector(w)
    if len(v) != 4:
        raise DimensionMismatchError("expected a length-4 weight vector (m = n = 2)")
    a, b, c, d = v
    return (v, (a, c, d, b), (a, d, c, b))


@dataclass(frozen=True)
class OrbitEffectiveness:
    """Scoring-block analysis of one orbit.

    ``rank`` is the dimension of the surviving profile information (row
    space) and equals the dimension of the image in committee space;
    ``image_component_dims[k]`` splits that image across components.
    Weights are not forced to sum to zero; a nonzero
    ``weight_entry_sum`` flags that the orbit feeds the trivial
    component (every committee gains the same per-ballot amount, which
    never changes winners but does change scores).
    """

    orbit_id: int
    alias: str | None
    size: int
    rank: int
    kernel_dim: int
    row_space_basis: tuple[Vec, ...]
    image_basis: tuple[Vec, ...]
    image_component_dims: tuple[int, ...]
    weight_entry_sum: Fraction


@dataclass(frozen=True)
class EffectiveSpaceReport:
    """Per-orbit effectiveness plus the two whole-rule dimensions.

    ``total_effective_dim`` sums the per-orbit row-space dimensions (the
    profile-side count); ``total_image_rank`` is the rank of the stacked
    scoring matrix, i.e. the dimension of everything the rule can output.
    """

    m: int
    n: int
    per_orbit: tuple[OrbitEffectiveness, ...]
    total_effective_dim: int
    total_image_rank: int


def _component_split_dims(m: int, n: int, vectors: tuple[Vec, ...]) -> tuple[int, ...]:
    """dim of the projection of span(vectors) onto each component k."""
    dims = []
    for k in range(n + 1):
        if not vectors:
            dims.append(0)
            continue
        projected = [decompose_result(m, n, v).components[k] for v in vectors]
        dims.append(rank(projected))
    return tuple(dims)


def effective_space(
    ow: OrbitWeights,
    fact_cap: int = caps.FACTORIAL_CAP,
    group_cap: int = caps.GROUP_CAP,
) -> EffectiveSpaceReport:
    """Rank, kernel, and image analysis of every orbit's scoring block."""
    dim = caps.guard_dimension(ow.m, ow.n)
    ids, _reps, _sizes = _orbit_partition(ow.m, ow.n, fact_cap, group_cap)
    orbits = enumerate_orbits(ow.m, ow.n, fact_cap, group_cap)
    weights = [ow.weight_for(o.id) for o in orbits]
    blocks: list[list[Vec]] = [[] for _ in orbits]
    for i, ranking in enumerate(itertools.permutations(range(dim))):
        w = weights[ids[i]]
        col = [_zero] * dim
        for pos, committee in enumerate(ranking):
            col[committee] = w[pos]
        blocks[ids[i]].append(tuple(col))
    per_orbit = []
    all_columns: list[Vec] = []
    total_effective = 0
    for o, cols in zip(orbits, blocks):
        all_columns.extend(cols)
        block = transpose(cols)  # m^n rows, one column per member ranking
        reduced_rows, pivots = rref(block)
        row_space = reduced_rows[: len(pivots)]
        image_reduced, image_pivots = rref(cols)
        image_basis = image_reduced[: len(image_pivots)]
        r = len(pivots)
        total_effective += r
        per_orbit.append(
            OrbitEffectiveness(
                orbit_id=o.id,
                alias=o.alias,
                size=o.size,
                rank=r,
                kernel_dim=o.size - r,
                row_space_basis=tuple(row_space),
                image_basis=tuple(image_basis),
                image_component_dims=_component_split_dims(ow.m, ow.n, tuple(image_basis)),
                weight_entry_sum=sum(weights[o.id], _zero),
            )
        )
    return EffectiveSpaceReport(
        m=ow.m,
        n=ow.n,
        per_orbit=tuple(per_orbit),
        total_effective_dim=total_effective,
        total_image_rank=rank(all_columns),
    )


_X_BASIS = ((1, 1, 1, 1), (1, -1, -1, 1), (1, 0, 0, -1), (0, 1, -1, 0))


def weight_coordinates_2wr2(w) -> tuple[Fraction, Fraction, Fraction, Fraction]:
    """Coordinates (x1, x2, x3, x4) of a length-4 weight vector in the
    basis {[1,1,1,1], [1,-1,-1,1], [1,0,0,-1], [0,1,-1,0]}."""
    v = as_vector(w)
    if len(v) != 4:
        raise DimensionMismatchError("expected a length-4 weight vector (m = n = 2)")
    a, b, c, d = v
    x1 = (a + b + c + d) / 4
    x2 = (a - b - c + d) / 4
    x3 = (a - d) / 2
    x4 = (b - c) / 2
    return (x1, x2, x3, x4)


@dataclass(frozen=True)
class OrbitPrediction:
    """Predicted vs measured behaviour of one orbit's weight vector."""

    orbit_id: int
    coordinates: tuple[Fraction, Fraction, Fraction, Fraction]
    killed: tuple[str, ...]
    predicted_image_dims: tuple[int, int, int]
    measured_image_dims: tuple[int, ...]
    measured_rank: int


@dataclass(frozen=True)
class Weights2wr2Analysis:
    per_orbit: tuple[OrbitPrediction, ...]
    total_image_rank: int
    consistent: bool


def analyze_2wr2(w1, w2, w3) -> Weights2wr2Analysis:
    """Kill/keep analysis of a three-weight m=n=2 rule.

    Per orbit, which components the rule kills is decided by the
    coordinates of that orbit's weight vector: x1 = 0 kills the trivial
    component everywhere; on the first orbit x2 = 0 (i.e. a+d = b+c)
    kills the sign component and x3 = x4 = 0 kills the two-dimensional
    middle component; on the second orbit x3 = x4 kills sign and
    x2 = 0 together with x3 = -x4 kills the middle; the third orbit
    swaps the two sign conditions.  Predictions are cross-validated
    against the measured scoring-block ranks.
    """
    vs = [as_vector(w) for w in (w1, w2, w3)]
    for v in vs:
        if len(v) != 4:
            raise DimensionMismatchError("analyze_2wr2 expects three length-4 weight vectors")
    ow = OrbitWeights(m=2, n=2, default=vs[0], by_orbit={0: vs[0], 1: vs[1], 2: vs[2]})
    report = effective_space(ow)
    predictions = []
    consistent = True
    for oid, v in enumerate(vs):
        x1, x2, x3, x4 = weight_coordinates_2wr2(v)
        if oid == 0:
            sign_alive = x2 != 0
            middle_alive = x3 != 0 or x4 != 0
        elif oid == 1:
            sign_alive = x3 != x4
            middle_alive = x2 != 0 or x3 != -x4
        else:
            sign_alive = x3 != -x4
            middle_alive = x2 != 0 or x3 != x4
        predicted = (1 if x1 != 0 else 0, 2 if middle_alive else 0, 1 if sign_alive else 0)
        killed = tuple(
            name
            for name, alive in (
                ("trivial", x1 != 0),
                ("middle", middle_alive),
                ("sign", sign_alive),
            )
            if not alive
        )
        measured = report.per_orbit[oid]
        ok = measured.image_component_dims == predicted and measured.rank == sum(predicted)
        consistent = consistent and ok
        predictions.append(
            OrbitPrediction(
                orbit_id=oid,
                coordinates=(x1, x2, x3, x4),
                killed=killed,
                predicted_image_dims=predicted,
                measured_image_dims=measured.image_component_dims,
                measured_rank=measured.rank,
            )
        )
    return Weights2wr2Analysis(
        per_orbit=tuple(predictions),
        total_image_rank=report.total_image_rank,
        consistent=consistent,
    )
