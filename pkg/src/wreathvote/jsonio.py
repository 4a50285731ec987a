"""JSON (de)serialisation with exact rationals.

Rationals travel as strings "p/q" (or "p" when the denominator is 1) in
every file format; integers are accepted on input.  Committees appear as
index integers, rankings as arrays of committee indices (most preferred
first).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Any

from .combinatorics import OrbitInfo, committee_label, enumerate_committees
from .decomposition import DecompositionReport
from .paradox import ParadoxSolution
from .rankings import EffectiveSpaceReport, OrbitWeights, RankingProfile
from .ratlinalg import Vec, as_rational, as_vector


def rat_str(x: Fraction) -> str:
    return str(x)


def vec_json(v: Vec) -> list[str]:
    return [str(x) for x in v]


def parse_vector(obj) -> Vec:
    if not isinstance(obj, (list, tuple)):
        raise ValueError("expected a JSON array of rationals")
    return as_vector(obj)


def parse_weights_csv(text: str) -> Vec:
    return as_vector(part for part in text.split(","))


def ballot_profile_from_json(m: int, n: int, obj) -> Vec:
    """Committee-ballot counts from a map of committee index -> multiplicity."""
    dim = m**n
    if isinstance(obj, list):
        return parse_vector(obj)
    if not isinstance(obj, dict):
        raise ValueError("ballot profile must be a JSON object or array")
    counts = [Fraction(0)] * dim
    for key, value in obj.items():
        idx = int(key)
        if not 0 <= idx < dim:
            raise ValueError(f"committee index {idx} out of range 0..{dim - 1}")
        counts[idx] += as_rational(value)
    return tuple(counts)


def ranking_profile_from_json(m: int, n: int, obj) -> RankingProfile:
    """Profile from a list of {"ranking": [...], "count": "p/q"} records."""
    from .rankings import ranking_profile

    if not isinstance(obj, list):
        raise ValueError('ranking profile must be a JSON array of {"ranking", "count"}')
    votes: dict[tuple[int, ...], Fraction] = {}
    for record in obj:
        r = tuple(int(i) for i in record["ranking"])
        votes[r] = votes.get(r, Fraction(0)) + as_rational(record.get("count", 1))
    return ranking_profile(m, n, votes)


def ranking_profile_json(p: RankingProfile) -> list[dict]:
    return [
        {"ranking": list(r), "count": str(c)}
        for r, c in sorted(p.votes.items())
    ]


def orbit_key(key, alias_to_id: dict[str, int]) -> int:
    """Resolve an orbit map key: canonical id digits or a figN alias."""
    text = str(key).strip()
    if text.lstrip("-").isdigit():
        return int(text)
    if text in alias_to_id:
        return alias_to_id[text]
    raise ValueError(f"unknown orbit key {key!r}")


def orbit_weights_from_json(m: int, n: int, obj) -> OrbitWeights:
    """OrbitWeights from {"default": [...], "orbits": {"<id-or-alias>": [...]}}."""
    from .combinatorics import enumerate_orbits

    if not isinstance(obj, dict) or "default" not in obj:
        raise ValueError('orbit weights need at least a "default" vector')
    alias_to_id: dict[str, int] = {}
    raw = obj.get("orbits", {})
    if raw and (m, n) == (2, 2):
        alias_to_id = {o.alias: o.id for o in enumerate_orbits(m, n) if o.alias}
    by_orbit = {orbit_key(key, alias_to_id): parse_vector(value) for key, value in raw.items()}
    return OrbitWeights(m=m, n=n, default=parse_vector(obj["default"]), by_orbit=by_orbit)


def orbit_info_json(o: OrbitInfo) -> dict:
    out: dict[str, Any] = {
        "id": o.id,
        "representative": list(o.representative),
        "size": o.size,
    }
    if o.alias:
        out["alias"] = o.alias
    return out


def committees_json(m: int, n: int) -> list[dict]:
    return [
        {"index": i, "label": committee_label(c), "choices": [x + 1 for x in c]}
        for i, c in enumerate(enumerate_committees(m, n))
    ]


def decomposition_json(report: DecompositionReport) -> dict:
    return {
        "input": vec_json(report.input),
        "components": [vec_json(c) for c in report.components],
        "norms_squared": [str(x) for x in report.norms_squared],
    }


def effective_space_json(report: EffectiveSpaceReport) -> dict:
    return {
        "m": report.m,
        "n": report.n,
        "canonicalization": "lex-min",
        "per_orbit": [
            {
                "orbit": o.orbit_id,
                **({"alias": o.alias} if o.alias else {}),
                "size": o.size,
                "rank": o.rank,
                "kernel_dim": o.kernel_dim,
                "weight_entry_sum": str(o.weight_entry_sum),
                "image_component_dims": list(o.image_component_dims),
                "image_basis": [vec_json(v) for v in o.image_basis],
                "row_space_basis": [vec_json(v) for v in o.row_space_basis],
            }
            for o in report.per_orbit
        ],
        "total_effective_dim": report.total_effective_dim,
        "total_image_rank": report.total_image_rank,
    }


def paradox_solution_json(sol: ParadoxSolution) -> dict:
    return {
        "profile": ranking_profile_json(sol.profile),
        "solution_space_dim": sol.solution_space_dim,
    }
