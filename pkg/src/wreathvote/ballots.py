"""Points-based rules on single-committee ballots.

A neutral rule awards a ballot's points by disagreement count alone, so
the full rule is one rational per distance: ``a[d]`` points go from a
ballot for C to every committee disagreeing with C in d departments.
Acting on the committee space, such a rule multiplies each irreducible
component by a single scalar (its Schur parameter); the n+1 scalars
determine the rule completely and expose which parts of a profile it
amplifies, kills, or reverses.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from . import caps
from .combinatorics import disagreement, enumerate_committees
from .decomposition import (
    DecompositionReport,
    _bucket_sums,
    component_vector,
    decompose_result,
)
from .errors import DimensionMismatchError, NotScalarError
from .ratlinalg import Mat, Vec, as_vector

_zero = Fraction(0)

NAMED_WEIGHT_RULES = (
    "borda_like",
    "approval_nondisjoint",
    "complement_pair",
    "parity_even",
    "alternating",
    "first_last",
)


@dataclass(frozen=True)
class DistanceWeights:
    """Distance-weight rule: a[d] points per disagreement count d."""

    m: int
    n: int
    a: Vec

    def __post_init__(self):
        if len(self.a) != self.n + 1:
            raise DimensionMismatchError(
                f"need {self.n + 1} weights for n={self.n}, got {len(self.a)}"
            )


@dataclass(frozen=True)
class SchurParameters:
    """Scalar action of a rule on components k = 0..n."""

    m: int
    n: int
    lam: Vec

    def effect(self, k: int) -> str:
        if self.lam[k] == 0:
            return "killed"
        return "amplified" if self.lam[k] > 0 else "reversed"


@dataclass(frozen=True)
class BallotTally:
    """Scores per committee plus the argmax winner set (ties preserved)."""

    scores: Vec
    winners: tuple[int, ...]


def distance_weights(m: int, n: int, a: Iterable) -> DistanceWeights:
    return DistanceWeights(m=m, n=n, a=as_vector(a))


def named_weights(name: str, m: int, n: int) -> DistanceWeights:
    """The catalogued example rules as distance-weight vectors."""
    if name == "borda_like":
        a = [n - d for d in range(n + 1)]
    elif name == "approval_nondisjoint":
        a = [1] * n + [0]
    elif name == "complement_pair":
        if m != 2:
            raise ValueError("complement_pair needs m = 2 (complements exist only there)")
        a = [1] + [0] * (n - 1) + [1]
    elif name == "parity_even":
        if m != 2:
            raise ValueError("parity_even needs m = 2")
        a = [1 if d % 2 == 0 else 0 for d in range(n + 1)]
    elif name == "alternating":
        a = [(-1) ** d for d in range(n + 1)]
    elif name == "first_last":
        a = [1] + [0] * (n - 1) + [1]
    else:
        raise ValueError(f"unknown rule name {name!r}; choose from {NAMED_WEIGHT_RULES}")
    return distance_weights(m, n, a)


def scoring_matrix(w: DistanceWeights, dim_cap: int = caps.DIMENSION_CAP) -> Mat:
    """Symmetric m^n x m^n matrix with entry [c, c'] = a[disagreement(c', c)]."""
    caps.guard_dimension(w.m, w.n, dim_cap)
    committees = enumerate_committees(w.m, w.n)
    return tuple(
        tuple(w.a[disagreement(c, c2)] for c2 in committees) for c in committees
    )


def _apply_rule(w: DistanceWeights, p: Vec) -> Vec:
    """scoring_matrix(w) @ p without materialising the matrix."""
    buckets = _bucket_sums(w.m, w.n, p)
    return tuple(
        sum((w.a[d] * row[d] for d in range(w.n + 1)), _zero) for row in buckets
    )


def _argmax(scores: Vec) -> tuple[int, ...]:
    top = max(scores)
    return tuple(i for i, s in enumerate(scores) if s == top)


def tally_committee_ballots(w: DistanceWeights, profile) -> BallotTally:
    """Score every committee against a ballot-count vector."""
    p = as_vector(profile)
    dim = caps.guard_dimension(w.m, w.n)
    if len(p) != dim:
        raise DimensionMismatchError(f"profile has dimension {len(p)}, expected {dim}")
    scores = _apply_rule(w, p)
    return BallotTally(scores=scores, winners=_argmax(scores))


def schur_parameters(w: DistanceWeights) -> SchurParameters:
    """The scalar by which the rule acts on each component k = 0..n.

    Computed by applying the rule to one spanning vector per component
    and checking the image is an exact scalar multiple; a non-multiple
    image would mean the rule is not neutral, which distance weights
    cannot be, so that raises :class:`NotScalarError` as a bug signal.
    """
    base = (0,) * w.n
    lam = []
    for k in range(w.n + 1):
        v = component_vector(w.m, w.n, k, base).vector
        image = _apply_rule(w, v)
        scalar = image[0] / v[0]  # entry at the target committee, p_k[0] != 0
        if any(iv != scalar * bv for iv, bv in zip(image, v)):
            raise NotScalarError(f"rule does not act as a scalar on component k={k}")
        lam.append(scalar)
    return SchurParameters(m=w.m, n=w.n, lam=tuple(lam))


@dataclass(frozen=True)
class RuleProfileAnalysis:
    """Decompositions of a profile and of its scores under one rule."""

    profile: DecompositionReport
    scores: DecompositionReport
    parameters: SchurParameters
    effects: tuple[str, ...]


def analyze_rule_on_profile(w: DistanceWeights, profile) -> RuleProfileAnalysis:
    """Decompose a profile and its scores, exposing the rule's action.

    The score decomposition is always the profile decomposition rescaled
    componentwise by the Schur parameters, so the effects tuple says per
    k whether that information is amplified, killed, or reversed.
    """
    p = as_vector(profile)
    dim = caps.guard_dimension(w.m, w.n)
    if len(p) != dim:
        raise DimensionMismatchError(f"profile has dimension {len(p)}, expected {dim}")
    params = schur_parameters(w)
    profile_report = decompose_result(w.m, w.n, p)
    scores_report = decompose_result(w.m, w.n, _apply_rule(w, p))
    return RuleProfileAnalysis(
        profile=profile_report,
        scores=scores_report,
        parameters=params,
        effects=tuple(params.effect(k) for k in range(w.n + 1)),
    )
