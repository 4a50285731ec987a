"""Irreducible components of the committee space and exact decomposition.

The m^n-dimensional committee space splits into n+1 orthogonal components
indexed by k = 0..n, of dimensions C(n,k)(m-1)^k.  Component k is spanned
by one vector b_C per committee C whose entry at C' depends only on the
number d of departments where C and C' disagree; that dependence is the
*distance profile* [p_0; ...; p_n] with

    p_d = sum_l C(n-d, l) * C(d, k-l) * (m-1)^l * (-1)^(k-l),

counting the size-k department subsets with l agreements.  k = 0 is the
all-ones (trivial) component, k = 1 the linear-in-disagreement one
(p_d = mn - n - md), k = n the sign component (p_d = (-1)^d (m-1)^(n-d)).

``decompose_result`` splits an arbitrary vector into its n+1 components.
It applies the scaled spanning operators B_k (matrix entry [C',C] =
p_k[d(C,C')]) which are verified *exactly*, once per (m, n), to be
orthogonal idempotents up to the scalar m^n p_k[0]/dim_k and to sum to
that multiple of the identity; this gives the same answer as solving the
normal equations against the redundant spanning set, at a fraction of the
cost.  ``ratlinalg.project_onto_span`` remains available as the general
(and independently testable) projection route.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import caps
from .combinatorics import Committee, committee_index, disagreement, enumerate_committees
from .errors import DimensionMismatchError
from .ratlinalg import Vec, as_vector, dot

_zero = Fraction(0)


@dataclass(frozen=True)
class DistanceProfile:
    """Entry values of a component-k spanning vector, indexed by disagreement d."""

    m: int
    n: int
    k: int
    values: Vec


@dataclass(frozen=True)
class ComponentVector:
    """Spanning vector b_C of component k targeted at one committee."""

    k: int
    target: Committee
    vector: Vec


@dataclass(frozen=True)
class DecompositionReport:
    """Orthogonal component split of a vector; components sum to the input."""

    m: int
    n: int
    input: Vec
    components: tuple[Vec, ...]
    norms_squared: tuple[Fraction, ...]

    def support(self) -> tuple[int, ...]:
        """Indices k whose component is nonzero."""
        return tuple(k for k, c in enumerate(self.components) if any(x != 0 for x in c))


def component_dimension(m: int, n: int, k: int) -> int:
    return math.comb(n, k) * (m - 1) ** k


@lru_cache(maxsize=256)
def distance_profile(m: int, n: int, k: int) -> DistanceProfile:
    """Profile [p_0; ...; p_n] of the component-k spanning vectors."""
    if not 0 <= k <= n:
        raise ValueError(f"k must be in 0..{n}, got {k}")
    if m < 2:
        raise ValueError(f"distance profiles need m >= 2, got m={m}")
    values = []
    for d in range(n + 1):
        total = sum(
            math.comb(n - d, ell) * math.comb(d, k - ell) * (m - 1) ** ell * (-1) ** (k - ell)
            for ell in range(max(0, k - d), min(k, n - d) + 1)
        )
        values.append(Fraction(total))
    return DistanceProfile(m=m, n=n, k=k, values=tuple(values))


def profile_vector(m: int, n: int, profile: Vec, target: Committee) -> Vec:
    """Place a by-disagreement profile around a target committee."""
    committees = enumerate_committees(m, n)
    if len(profile) != n + 1:
        raise DimensionMismatchError(f"profile must have {n + 1} entries")
    return tuple(profile[disagreement(target, c)] for c in committees)


def component_vector(m: int, n: int, k: int, target: Committee) -> ComponentVector:
    """The spanning vector b_C of component k for target committee C."""
    committee_index(m, n, target)  # validates the target
    prof = distance_profile(m, n, k)
    return ComponentVector(k=k, target=target, vector=profile_vector(m, n, prof.values, target))


def component_spanning_set(
    m: int, n: int, k: int, dim_cap: int = caps.DIMENSION_CAP
) -> list[ComponentVector]:
    """b_C for every committee C: a redundant spanning set of component k.

    The rank of the stacked vectors is the component dimension
    C(n,k)(m-1)^k.
    """
    caps.guard_dimension(m, n, dim_cap)
    return [component_vector(m, n, k, c) for c in enumerate_committees(m, n)]


def borda_department_basis(m: int, n: int) -> list[Vec]:
    """The n(m-1) vectors v_{d,i}: +1 on committees picking candidate 1 of
    department d, -1 on those picking candidate i, 0 elsewhere.

    They span the same space as the k = 1 spanning set.
    """
    if m < 2:
        raise ValueError("need m >= 2")
    committees = enumerate_committees(m, n)
    basis = []
    for d in range(n):
        for i in range(1, m):
            basis.append(
                tuple(
                    Fraction(1) if c[d] == 0 else Fraction(-1) if c[d] == i else _zero
                    for c in committees
                )
            )
    return basis


def kronecker_basis_vector(m: int, n: int, departments: tuple[int, ...], subcommittee: tuple[int, ...]) -> Vec:
    """Raw tensor construction of one b_{c_k} vector (test support).

    Kronecker product over departments of the all-ones vector, except for
    the selected departments which contribute the vector with m-1 at the
    subcommittee's candidate and -1 elsewhere.  The entry for a committee
    agreeing with the subcommittee in exactly l of the k selected
    departments is (m-1)^l (-1)^(k-l).
    """
    if len(departments) != len(subcommittee):
        raise DimensionMismatchError("one subcommittee choice per selected department")
    chosen = dict(zip(departments, subcommittee))
    factors = []
    for d in range(n):
        if d in chosen:
            factors.append(
                [Fraction(m - 1) if j == chosen[d] else Fraction(-1) for j in range(m)]
            )
        else:
            factors.append([Fraction(1)] * m)
    entries = [Fraction(1)]
    for factor in factors:
        entries = [e * f for e in entries for f in factor]
    return tuple(entries)


@lru_cache(maxsize=32)
def _projector_profiles(m: int, n: int) -> tuple[Vec, ...]:
    """By-disagreement profiles q_k of the orthogonal component projectors.

    q_k = p_k * dim_k / (m^n * p_k[0]).  Before use the profiles are
    verified exactly: the operators they induce must sum to the identity
    and compose as orthogonal idempotents.  Composition of two
    by-disagreement operators is again by-disagreement, so the check runs
    on the n+1 distance classes instead of full m^n x m^n matrices.
    """
    dim = m**n
    profiles = []
    for k in range(n + 1):
        p = distance_profile(m, n, k).values
        scale = Fraction(component_dimension(m, n, k), dim * p[0])
        profiles.append(tuple(scale * x for x in p))
    counts = _distance_triples(m, n)
    for k1 in range(n + 1):
        for k2 in range(n + 1):
            expected = profiles[k1] if k1 == k2 else ((_zero,) * (n + 1))
            for d in range(n + 1):
                composed = sum(
                    (
                        profiles[k1][d1] * profiles[k2][d2] * counts[d][d1][d2]
                        for d1 in range(n + 1)
                        for d2 in range(n + 1)
                    ),
                    _zero,
                )
                if composed != expected[d]:
                    raise ArithmeticError(
                        f"projector profiles failed verification at m={m}, n={n}"
                    )
    for d in range(n + 1):
        total = sum((q[d] for q in profiles), _zero)
        if total != (1 if d == 0 else 0):
            raise ArithmeticError(f"projector profiles do not resolve the identity at d={d}")
    return tuple(profiles)


@lru_cache(maxsize=32)
def _distance_triples(m: int, n: int) -> tuple:
    """counts[d][d1][d2] = committees at disagreement d1 from C and d2 from C',
    for any pair with disagreement(C, C') = d."""
    committees = enumerate_committees(m, n)
    base = committees[0]
    counts = []
    for d in range(n + 1):
        other = tuple((1 if i < d else 0) for i in range(n))
        table = [[0] * (n + 1) for _ in range(n + 1)]
        for c in committees:
            table[disagreement(base, c)][disagreement(other, c)] += 1
        counts.append(tuple(tuple(row) for row in table))
    return tuple(counts)


def _bucket_sums(m: int, n: int, v: Vec) -> list[list[Fraction]]:
    """For each committee index c, the sums of v over the disagreement classes."""
    committees = enumerate_committees(m, n)
    out = []
    for c in committees:
        row = [_zero] * (n + 1)
        for value, c2 in zip(v, committees):
            if value != 0:
                row[disagreement(c, c2)] += value
        out.append(row)
    return out


def decompose_result(m: int, n: int, v) -> DecompositionReport:
    """Split a vector of dimension m^n into its n+1 orthogonal components.

    The components sum to the input exactly and are pairwise orthogonal;
    the report also carries each component's squared norm.
    """
    vv = as_vector(v)
    dim = caps.guard_dimension(m, n)
    if len(vv) != dim:
        raise DimensionMismatchError(f"vector has dimension {len(vv)}, expected {dim}")
    if m == 1:
        zero = (_zero,) * dim
        comps = (vv,) + (zero,) * n
        return DecompositionReport(
            m=m,
            n=n,
            input=vv,
            components=comps,
            norms_squared=tuple(dot(c, c) for c in comps),
        )
    profiles = _projector_profiles(m, n)
    buckets = _bucket_sums(m, n, vv)
    components = []
    for k in range(n + 1):
        q = profiles[k]
        components.append(tuple(sum((q[d] * row[d] for d in range(n + 1)), _zero) for row in buckets))
    total = [sum(col, _zero) for col in zip(*components)]
    if tuple(total) != vv:
        raise ArithmeticError("component decomposition failed to reconstruct its input")
    return DecompositionReport(
        m=m,
        n=n,
        input=vv,
        components=tuple(components),
        norms_squared=tuple(dot(c, c) for c in components),
    )
