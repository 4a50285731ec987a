"""Committees, rankings, the wreath product S_m wr S_n, and orbits.

A committee picks one of ``m`` candidates in each of ``n`` departments and
is stored as a 0-based tuple of choices.  Committees are ordered
lexicographically and referred to everywhere else by their position in
that order.  Group elements pair one inner permutation of the candidates
per department with an outer permutation of the departments; the action
first moves departments, then relabels candidates inside each.

Rankings are tuples of committee indices, most preferred first.  The
group acts on rankings positionwise, freely for m >= 2, so each orbit is
a copy of the regular representation.  Orbit partitioning of all (m^n)!
rankings is delegated to a compiled kernel when available, with a
pure-Python fallback selected at import time (see ``KERNEL``).
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import lru_cache

from . import caps
from .errors import DimensionMismatchError

try:
    from . import _orbitcore as _kernel

    KERNEL = "compiled"
except ImportError:  # extension not built; use the pure twin
    from . import _orbitpy as _kernel

    KERNEL = "python"

Committee = tuple[int, ...]
Ranking = tuple[int, ...]

# Conventional labels for the three ranking orbits of the 2-by-2 case,
# keyed by canonical representative.
_ALIASES_2WR2 = {
    (0, 1, 2, 3): "fig1",  # disjoint committees first/last or middle
    (0, 1, 3, 2): "fig2",  # disjoint committees first/third or second/last
    (0, 3, 1, 2): "fig3",  # disjoint committees first/second or third/last
}


@dataclass(frozen=True)
class WreathElement:
    """Group element (sigma; pi): inner candidate permutations + outer."""

    inner: tuple[tuple[int, ...], ...]
    outer: tuple[int, ...]

    @property
    def m(self) -> int:
        return len(self.inner[0])

    @property
    def n(self) -> int:
        return len(self.outer)

    def is_identity(self) -> bool:
        return all(p == tuple(range(self.m)) for p in self.inner) and self.outer == tuple(
            range(self.n)
        )


@dataclass(frozen=True)
class OrbitInfo:
    """One ranking orbit: canonical representative, size and id.

    The representative is the lexicographically smallest member; ids run
    0..count-1 in sorted-representative order when the full partition is
    enumerable, and otherwise equal the representative's Lehmer rank.
    ``alias`` carries the conventional fig1/fig2/fig3 labels for m=n=2.
    """

    id: int
    representative: Ranking
    size: int
    alias: str | None = None


def identity_element(m: int, n: int) -> WreathElement:
    return WreathElement(inner=(tuple(range(m)),) * n, outer=tuple(range(n)))


def compose(g: WreathElement, h: WreathElement) -> WreathElement:
    """Group product g*h, acting as first h then g."""
    if g.m != h.m or g.n != h.n:
        raise DimensionMismatchError("group elements from different wreath products")
    outer = tuple(g.outer[h.outer[i]] for i in range(g.n))
    g_outer_inv = _invert(g.outer)
    inner = tuple(
        tuple(g.inner[i][h.inner[g_outer_inv[i]][x]] for x in range(g.m)) for i in range(g.n)
    )
    return WreathElement(inner=inner, outer=outer)


def inverse(g: WreathElement) -> WreathElement:
    outer_inv = _invert(g.outer)
    inner = tuple(_invert(g.inner[g.outer[i]]) for i in range(g.n))
    return WreathElement(inner=inner, outer=outer_inv)


def _invert(p: tuple[int, ...]) -> tuple[int, ...]:
    inv = [0] * len(p)
    for i, v in enumerate(p):
        inv[v] = i
    return tuple(inv)


@lru_cache(maxsize=64)
def enumerate_committees(m: int, n: int, dim_cap: int = caps.DIMENSION_CAP) -> tuple[Committee, ...]:
    """All m^n committees in lexicographic order of their choice tuples."""
    caps.guard_dimension(m, n, dim_cap)
    return tuple(itertools.product(range(m), repeat=n))


def committee_index(m: int, n: int, committee: Committee) -> int:
    if len(committee) != n or any(not 0 <= c < m for c in committee):
        raise DimensionMismatchError(f"{committee} is not a committee for m={m}, n={n}")
    idx = 0
    for c in committee:
        idx = idx * m + c
    return idx


def committee_label(committee: Committee) -> str:
    """Render a committee in subscript notation, e.g. ``(1_1,2_2)``."""
    return "(" + ",".join(f"{d + 1}_{c + 1}" for d, c in enumerate(committee)) + ")"


def disagreement(c1: Committee, c2: Committee) -> int:
    """Number of departments where the two committees pick different people."""
    if len(c1) != len(c2):
        raise DimensionMismatchError("committees have different department counts")
    return sum(a != b for a, b in zip(c1, c2))


def apply_wreath(g: WreathElement, committee: Committee) -> Committee:
    """Act on a committee: permute departments by pi, then relabel by sigma."""
    if len(committee) != g.n or any(not 0 <= c < g.m for c in committee):
        raise DimensionMismatchError("committee incompatible with group element")
    outer_inv = _invert(g.outer)
    return tuple(g.inner[i][committee[outer_inv[i]]] for i in range(g.n))


@lru_cache(maxsize=32)
def enumerate_group(m: int, n: int, group_cap: int = caps.GROUP_CAP) -> tuple[WreathElement, ...]:
    """All (m!)^n * n! group elements, outer-major deterministic order.

    Outer permutations run in lexicographic one-line order; for each, the
    inner tuples run in odometer order (last department fastest).
    """
    caps.guard_group(m, n, group_cap)
    perms_m = tuple(itertools.permutations(range(m)))
    return tuple(
        WreathElement(inner=inner, outer=outer)
        for outer in itertools.permutations(range(n))
        for inner in itertools.product(perms_m, repeat=n)
    )


@lru_cache(maxsize=32)
def committee_permutations(
    m: int, n: int, group_cap: int = caps.GROUP_CAP
) -> tuple[tuple[int, ...], ...]:
    """Per group element, the induced permutation of committee indices."""
    committees = enumerate_committees(m, n)
    return tuple(
        tuple(committee_index(m, n, apply_wreath(g, c)) for c in committees)
        for g in enumerate_group(m, n, group_cap)
    )


def apply_wreath_to_ranking(m: int, n: int, g: WreathElement, ranking: Ranking) -> Ranking:
    """Relabel every committee in the ranking by g, keeping positions."""
    dim = caps.guard_dimension(m, n)
    _check_ranking(dim, ranking)
    committees = enumerate_committees(m, n)
    return tuple(committee_index(m, n, apply_wreath(g, committees[i])) for i in ranking)


def _check_ranking(dim: int, ranking: Ranking) -> None:
    if len(ranking) != dim or sorted(ranking) != list(range(dim)):
        raise DimensionMismatchError("ranking is not a permutation of all committee indices")


def orbit_count(m: int, n: int) -> int:
    """Exact number of ranking orbits, (m^n)!/((m!)^n n!) for m >= 2.

    For m = 1 there is a single ranking, hence one orbit (the action is
    not free there and the closed form does not apply).
    """
    if m < 1 or n < 1:
        raise ValueError(f"need m >= 1 and n >= 1, got m={m}, n={n}")
    if m == 1:
        return 1
    return math.factorial(m**n) // (math.factorial(m) ** n * math.factorial(n))


def ranking_orbit(
    m: int,
    n: int,
    ranking: Ranking,
    group_cap: int = caps.GROUP_CAP,
) -> tuple[Ranking, ...]:
    """The full orbit of a ranking, sorted lexicographically."""
    dim = caps.guard_dimension(m, n)
    _check_ranking(dim, ranking)
    images = {
        tuple(perm[i] for i in ranking) for perm in committee_permutations(m, n, group_cap)
    }
    return tuple(sorted(images))


def orbit_of_ranking(
    m: int,
    n: int,
    ranking: Ranking,
    fact_cap: int = caps.FACTORIAL_CAP,
    group_cap: int = caps.GROUP_CAP,
) -> OrbitInfo:
    """Orbit data for one ranking.

    The id is the orbit's position in the full sorted-representative
    enumeration when (m^n)! fits under ``fact_cap``; beyond that cap the
    id is derived from the representative alone, as its Lehmer rank among
    all rankings.
    """
    orbit = ranking_orbit(m, n, ranking, group_cap)
    rep = orbit[0]
    try:
        ids, _reps, _sizes = _orbit_partition(m, n, fact_cap, group_cap)
    except caps.SizeGuardError:
        oid = rank_permutation(rep)
    else:
        oid = ids[rank_permutation(rep)]
    return OrbitInfo(
        id=oid,
        representative=rep,
        size=len(orbit),
        alias=_ALIASES_2WR2.get(rep) if (m, n) == (2, 2) else None,
    )


@lru_cache(maxsize=8)
def _orbit_partition(m: int, n: int, fact_cap: int, group_cap: int):
    """(orbit_ids, representatives, sizes) over all rankings in lex order."""
    caps.guard_factorial(m, n, fact_cap)
    dim = m**n
    perms = committee_permutations(m, n, group_cap)
    orbit_ids, rep_indices = _kernel.partition_rankings(dim, perms)
    reps = tuple(unrank_permutation(dim, i) for i in rep_indices)
    sizes = [0] * len(rep_indices)
    for oid in orbit_ids:
        sizes[oid] += 1
    return orbit_ids, reps, tuple(sizes)


def enumerate_orbits(
    m: int,
    n: int,
    fact_cap: int = caps.FACTORIAL_CAP,
    group_cap: int = caps.GROUP_CAP,
) -> tuple[OrbitInfo, ...]:
    """All ranking orbits, ids 0..count-1 in sorted-representative order."""
    _ids, reps, sizes = _orbit_partition(m, n, fact_cap, group_cap)
    aliases = _ALIASES_2WR2 if (m, n) == (2, 2) else {}
    return tuple(
        OrbitInfo(id=i, representative=rep, size=size, alias=aliases.get(rep))
        for i, (rep, size) in enumerate(zip(reps, sizes))
    )


def orbit_members(
    m: int,
    n: int,
    orbit_id: int,
    fact_cap: int = caps.FACTORIAL_CAP,
    group_cap: int = caps.GROUP_CAP,
) -> tuple[Ranking, ...]:
    """Members of one orbit in lexicographic order."""
    ids, reps, _sizes = _orbit_partition(m, n, fact_cap, group_cap)
    if not 0 <= orbit_id < len(reps):
        raise ValueError(f"orbit id {orbit_id} out of range (count {len(reps)})")
    dim = m**n
    return tuple(
        perm
        for i, perm in enumerate(itertools.permutations(range(dim)))
        if ids[i] == orbit_id
    )


def rank_permutation(perm: tuple[int, ...]) -> int:
    """Lehmer rank: position of the permutation in lexicographic order."""
    n = len(perm)
    r = 0
    for a in range(n):
        smaller = sum(1 for b in range(a + 1, n) if perm[b] < perm[a])
        r += smaller * math.factorial(n - 1 - a)
    return r


def unrank_permutation(n: int, index: int) -> tuple[int, ...]:
    """Inverse of :func:`rank_permutation`."""
    pool = list(range(n))
    out = []
    for a in range(n - 1, -1, -1):
        f = math.factorial(a)
        q, index = divmod(index, f)
        out.append(pool.pop(q))
    return tuple(out)
