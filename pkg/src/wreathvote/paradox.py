"""Constructive paradox profiles inside a single ranking orbit.

Given sum-zero weighting vectors whose component projections are linearly
independent wherever the targets need them, one can realise *any*
sum-zero results vectors simultaneously, with a profile supported on
whichever orbit one likes, and with room to spare.  The construction here
is direct: one unknown multiplicity per ranking in the orbit, one exact
linear constraint per weight/committee pair, solved over the rationals.
The dimension of the solution space (orbit size minus constraint rank)
witnesses the "infinitely many profiles" in each orbit.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import caps
from .combinatorics import OrbitInfo, orbit_members
from .decomposition import decompose_result
from .errors import DimensionMismatchError, InfeasibleError
from .rankings import RankingProfile, positional_scores
from .ratlinalg import Vec, as_vector, rank, solve

_zero = Fraction(0)


@dataclass(frozen=True)
class ParadoxInstance:
    """Sum-zero weights, one sum-zero target result per weight, and an orbit."""

    m: int
    n: int
    weights: tuple[Vec, ...]
    targets: tuple[Vec, ...]
    orbit: OrbitInfo


@dataclass(frozen=True)
class ParadoxSolution:
    """A profile on the orbit achieving every target, plus the slack dimension."""

    profile: RankingProfile
    solution_space_dim: int


def paradox_instance(m: int, n: int, weights, targets, orbit: OrbitInfo) -> ParadoxInstance:
    """Validate and pack an instance; sums must be exactly zero."""
    dim = caps.guard_dimension(m, n)
    ws = tuple(as_vector(w) for w in weights)
    ts = tuple(as_vector(t) for t in targets)
    if len(ws) != len(ts):
        raise DimensionMismatchError("need exactly one target per weighting vector")
    for label, vectors in (("weight", ws), ("target", ts)):
        for v in vectors:
            if len(v) != dim:
                raise DimensionMismatchError(f"{label} vectors must have length {dim}")
            if sum(v, _zero) != 0:
                raise ValueError(f"{label} vector {tuple(map(str, v))} is not sum-zero")
    return ParadoxInstance(m=m, n=n, weights=ws, targets=ts, orbit=orbit)


def check_weight_independence(m: int, n: int, weights) -> tuple[bool, ...]:
    """Per component k = 1..n: are the weight projections linearly independent?

    A zero projection counts as dependent, so a single weight vector is
    "independent in k" exactly when its k-component is nonzero.
    """
    ws = [as_vector(w) for w in weights]
    dim = caps.guard_dimension(m, n)
    for w in ws:
        if len(w) != dim:
            raise DimensionMismatchError(f"weight vectors must have length {dim}")
    reports = [decompose_result(m, n, w) for w in ws]
    out = []
    for k in range(1, n + 1):
        projections = [rep.components[k] for rep in reports]
        out.append(rank(projections) == len(ws))
    return tuple(out)


def construct_paradox_profile(
    inst: ParadoxInstance,
    fact_cap: int = caps.FACTORIAL_CAP,
    group_cap: int = caps.GROUP_CAP,
) -> ParadoxSolution:
    """Solve for a profile on the orbit with every weight hitting its target.

    Preconditions checked first: wherever some target has a nonzero
    component the weight projections must be independent there, and
    wherever every weight projection vanishes the targets must vanish
    too.  Violations raise :class:`InfeasibleError`.
    """
    m, n = inst.m, inst.n
    independence = check_weight_independence(m, n, inst.weights)
    weight_reports = [decompose_result(m, n, w) for w in inst.weights]
    target_reports = [decompose_result(m, n, t) for t in inst.targets]
    for k in range(1, n + 1):
        target_nonzero = any(k in rep.support() for rep in target_reports)
        weights_all_zero = all(k not in rep.support() for rep in weight_reports)
        if target_nonzero and weights_all_zero:
            raise InfeasibleError(
                f"targets have a component-{k} part but every weight kills component {k}"
            )
        if target_nonzero and not independence[k - 1]:
            raise InfeasibleError(
                f"weight projections onto component {k} are dependent but a target needs it"
            )
    members = orbit_members(m, n, inst.orbit.id, fact_cap, group_cap)
    dim = m**n
    rows: list[Vec] = []
    rhs: list[Fraction] = []
    for w, t in zip(inst.weights, inst.targets):
        columns = []
        for ranking in members:
            col = [_zero] * dim
            for pos, committee in enumerate(ranking):
                col[committee] = w[pos]
            columns.append(col)
        for c in range(dim):
            rows.append(tuple(col[c] for col in columns))
            rhs.append(t[c])
    solution = solve(rows, rhs)
    votes = {r: x for r, x in zip(members, solution) if x != 0}
    return ParadoxSolution(
        profile=RankingProfile(m=m, n=n, votes=votes),
        solution_space_dim=len(members) - rank(rows),
    )


def verify_solution(inst: ParadoxInstance, sol: ParadoxSolution) -> bool:
    """Recompute every tally exactly; confirm targets and orbit support."""
    members = set(orbit_members(inst.m, inst.n, inst.orbit.id))
    if any(r not in members for r in sol.profile.votes):
        return False
    for w, t in zip(inst.weights, inst.targets):
        if positional_scores(inst.m, inst.n, w, sol.profile.votes) != t:
            return False
    return True
