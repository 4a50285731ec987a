"""Command-line interface: one subcommand per library analysis.

Everything reads and writes JSON (rationals as "p/q" strings) or aligned
tables, deterministically, so each worked example is reproducible as a
single shell line.  Exit codes: 0 success, 1 bad input, 2 size guard,
3 infeasible paradox instance.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import caps, jsonio
from .ballots import (
    NAMED_WEIGHT_RULES,
    distance_weights,
    named_weights,
    schur_parameters,
    tally_committee_ballots,
)
from .combinatorics import (
    committee_label,
    enumerate_committees,
    enumerate_orbits,
    orbit_count,
)
from .decomposition import decompose_result, distance_profile
from .errors import InfeasibleError, SizeGuardError, WreathvoteError
from .paradox import construct_paradox_profile, paradox_instance
from .rankings import (
    effective_space,
    parameter_count,
    tally_rankings,
    uniform_weights,
)

EXIT_OK = 0
EXIT_BAD_INPUT = 1
EXIT_SIZE_GUARD = 2
EXIT_INFEASIBLE = 3


def _emit(args, payload: dict, table_lines) -> None:
    if args.format == "json":
        print(json.dumps(payload, indent=2))
    else:
        for line in table_lines:
            print(line)


def _load_json_arg(value: str):
    """Inline JSON if the value looks like it; otherwise read the file."""
    text = value.strip()
    if text.startswith(("{", "[")):
        return json.loads(text)
    with open(value, "r", encoding="utf-8") as fh:
        return json.load(fh)


def _vector_arg(args, what: str):
    if getattr(args, "weights", None):
        return jsonio.parse_weights_csv(args.weights)
    if getattr(args, "weights_file", None):
        return jsonio.parse_vector(_load_json_arg(args.weights_file))
    raise ValueError(f"provide {what} via --weights or --weights-file")


def _distance_weights_arg(args):
    if getattr(args, "named", None):
        return named_weights(args.named, args.m, args.n)
    return distance_weights(args.m, args.n, _vector_arg(args, "distance weights a0,...,an"))


def cmd_committees(args) -> int:
    enumerate_committees(args.m, args.n, args.cap_dim)
    rows = jsonio.committees_json(args.m, args.n)
    _emit(
        args,
        {"m": args.m, "n": args.n, "committees": rows},
        [f"{r['index']:>5}  {r['label']}" for r in rows],
    )
    return EXIT_OK


def cmd_distance_profile(args) -> int:
    prof = distance_profile(args.m, args.n, args.k)
    payload = {
        "m": args.m,
        "n": args.n,
        "k": args.k,
        "values_by_disagreement": jsonio.vec_json(prof.values),
    }
    _emit(
        args,
        payload,
        [f"d={d}  {v}" for d, v in enumerate(prof.values)],
    )
    return EXIT_OK


def cmd_decompose(args) -> int:
    vector = _vector_arg(args, "the vector to decompose")
    report = decompose_result(args.m, args.n, vector)
    payload = jsonio.decomposition_json(report)
    lines = [f"input: {' '.join(jsonio.vec_json(report.input))}"]
    for k, comp in enumerate(report.components):
        lines.append(f"k={k}: {' '.join(jsonio.vec_json(comp))}  |.|^2={report.norms_squared[k]}")
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_schur(args) -> int:
    w = _distance_weights_arg(args)
    params = schur_parameters(w)
    payload = {
        "m": args.m,
        "n": args.n,
        "distance_weights": jsonio.vec_json(w.a),
        "schur_parameters": jsonio.vec_json(params.lam),
        "effects": [params.effect(k) for k in range(args.n + 1)],
    }
    _emit(
        args,
        payload,
        [f"k={k}  lambda={params.lam[k]}  {params.effect(k)}" for k in range(args.n + 1)],
    )
    return EXIT_OK


def cmd_tally_ballots(args) -> int:
    w = _distance_weights_arg(args)
    profile = jsonio.ballot_profile_from_json(args.m, args.n, _load_json_arg(args.profile))
    tally = tally_committee_ballots(w, profile)
    committees = enumerate_committees(args.m, args.n)
    payload = {
        "scores": jsonio.vec_json(tally.scores),
        "winners": list(tally.winners),
        "winner_labels": [committee_label(committees[i]) for i in tally.winners],
    }
    lines = [
        f"{i:>5}  {committee_label(c)}  {s}" + ("  *" if i in tally.winners else "")
        for i, (c, s) in enumerate(zip(committees, tally.scores))
    ]
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_tally_rankings(args) -> int:
    if args.weights_file:
        ow = jsonio.orbit_weights_from_json(args.m, args.n, _load_json_arg(args.weights_file))
    elif args.weights:
        ow = uniform_weights(args.m, args.n, jsonio.parse_weights_csv(args.weights))
    else:
        raise ValueError("provide position weights via --weights or --weights-file")
    profile = jsonio.ranking_profile_from_json(args.m, args.n, _load_json_arg(args.profile))
    tally = tally_rankings(ow, profile, args.cap_fact)
    committees = enumerate_committees(args.m, args.n)
    payload = {
        "scores": jsonio.vec_json(tally.scores),
        "winners": list(tally.winners),
        "winner_labels": [committee_label(committees[i]) for i in tally.winners],
    }
    lines = [
        f"{i:>5}  {committee_label(c)}  {s}" + ("  *" if i in tally.winners else "")
        for i, (c, s) in enumerate(zip(committees, tally.scores))
    ]
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_orbits(args) -> int:
    count = orbit_count(args.m, args.n)
    if args.count_only:
        payload = {"m": args.m, "n": args.n, "orbit_count": str(count)}
        _emit(args, payload, [str(count)])
        return EXIT_OK
    orbits = enumerate_orbits(args.m, args.n, args.cap_fact)
    payload = {
        "m": args.m,
        "n": args.n,
        "orbit_count": str(count),
        "canonicalization": "lex-min",
        "orbits": [jsonio.orbit_info_json(o) for o in orbits],
    }
    lines = [
        f"{o.id:>5}  size={o.size}  rep={','.join(map(str, o.representative))}"
        + (f"  [{o.alias}]" if o.alias else "")
        for o in orbits
    ]
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_effective(args) -> int:
    if args.weights_file:
        ow = jsonio.orbit_weights_from_json(args.m, args.n, _load_json_arg(args.weights_file))
    elif args.weights:
        ow = uniform_weights(args.m, args.n, jsonio.parse_weights_csv(args.weights))
    else:
        raise ValueError("provide position weights via --weights or --weights-file")
    report = effective_space(ow, args.cap_fact)
    payload = jsonio.effective_space_json(report)
    lines = []
    for o in report.per_orbit:
        tag = f" [{o.alias}]" if o.alias else ""
        lines.append(
            f"orbit {o.orbit_id}{tag}: rank={o.rank} kernel={o.kernel_dim} "
            f"image-dims-by-k={list(o.image_component_dims)} weight-sum={o.weight_entry_sum}"
        )
    lines.append(f"total effective dim {report.total_effective_dim}")
    lines.append(f"total image rank {report.total_image_rank}")
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_paradox(args) -> int:
    if args.instance:
        data = _load_json_arg(args.instance)
    else:
        if not (args.weights_file and args.targets):
            raise ValueError("provide --instance, or --weights-file plus --targets")
        data = {
            "weights": _load_json_arg(args.weights_file),
            "targets": _load_json_arg(args.targets),
        }
    if args.orbit is not None:
        data["orbit"] = args.orbit
    if "orbit" not in data:
        raise ValueError("no orbit specified (instance field 'orbit' or --orbit)")
    orbits = enumerate_orbits(args.m, args.n, args.cap_fact)
    alias_to_id = {o.alias: o.id for o in orbits if o.alias}
    oid = jsonio.orbit_key(data["orbit"], alias_to_id)
    if not 0 <= oid < len(orbits):
        raise ValueError(f"orbit id {oid} out of range (count {len(orbits)})")
    inst = paradox_instance(
        args.m,
        args.n,
        [jsonio.parse_vector(w) for w in data["weights"]],
        [jsonio.parse_vector(t) for t in data["targets"]],
        orbits[oid],
    )
    sol = construct_paradox_profile(inst, args.cap_fact)
    payload = {"orbit": jsonio.orbit_info_json(orbits[oid]), **jsonio.paradox_solution_json(sol)}
    lines = [f"orbit {oid}: solution_space_dim={sol.solution_space_dim}"]
    for record in payload["profile"]:
        lines.append(f"  {','.join(map(str, record['ranking']))}  x {record['count']}")
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_param_count(args) -> int:
    value = parameter_count(args.m, args.n)
    _emit(args, {"m": args.m, "n": args.n, "parameter_count": str(value)}, [str(value)])
    return EXIT_OK


def _add_common(p: argparse.ArgumentParser, *, need_k=False) -> None:
    p.add_argument("--m", type=int, required=True, help="candidates per department")
    p.add_argument("--n", type=int, required=True, help="number of departments")
    if need_k:
        p.add_argument("--k", type=int, required=True, help="component index 0..n")
    p.add_argument("--format", choices=("json", "table"), default="json")
    p.add_argument("--cap-dim", type=int, default=caps.DIMENSION_CAP, dest="cap_dim")
    p.add_argument("--cap-fact", type=int, default=caps.FACTORIAL_CAP, dest="cap_fact")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wreathvote",
        description="Exact wreath-product analysis of structured-committee voting.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("committees", help="list all committees in lexicographic order")
    _add_common(p)
    p.set_defaults(func=cmd_committees)

    p = sub.add_parser("distance-profile", help="component spanning-vector profile by disagreement")
    _add_common(p, need_k=True)
    p.set_defaults(func=cmd_distance_profile)

    p = sub.add_parser("decompose", help="split a results vector into orthogonal components")
    _add_common(p)
    p.add_argument("--weights", help="comma-separated rationals (the vector to decompose)")
    p.add_argument("--weights-file", dest="weights_file", help="JSON array file")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("schur", help="scalar action of a distance-weight rule per component")
    _add_common(p)
    p.add_argument("--weights", help="distance weights a0,a1,...,an")
    p.add_argument("--weights-file", dest="weights_file")
    p.add_argument("--named", choices=NAMED_WEIGHT_RULES, help="catalogued rule")
    p.set_defaults(func=cmd_schur)

    p = sub.add_parser("tally-ballots", help="tally single-committee ballots")
    _add_common(p)
    p.add_argument("--weights", help="distance weights a0,a1,...,an")
    p.add_argument("--weights-file", dest="weights_file")
    p.add_argument("--named", choices=NAMED_WEIGHT_RULES)
    p.add_argument(
        "--profile",
        required=True,
        help="JSON map committee index -> multiplicity (inline or a file path)",
    )
    p.set_defaults(func=cmd_tally_ballots)

    p = sub.add_parser("tally-rankings", help="tally full-ranking ballots with orbit weights")
    _add_common(p)
    p.add_argument("--weights", help="uniform position weights w0,...,w(m^n-1)")
    p.add_argument("--weights-file", dest="weights_file", help="orbit-weights JSON")
    p.add_argument(
        "--profile",
        required=True,
        help='JSON list of {"ranking": [...], "count": "p/q"} (inline or file)',
    )
    p.set_defaults(func=cmd_tally_rankings)

    p = sub.add_parser("orbits", help="enumerate ranking orbits (or just count them)")
    _add_common(p)
    p.add_argument("--count-only", action="store_true", dest="count_only")
    p.set_defaults(func=cmd_orbits)

    p = sub.add_parser("effective", help="per-orbit rank/kernel/image analysis of a ranking rule")
    _add_common(p)
    p.add_argument("--weights", help="uniform position weights")
    p.add_argument("--weights-file", dest="weights_file", help="orbit-weights JSON")
    p.set_defaults(func=cmd_effective)

    p = sub.add_parser("paradox", help="construct a profile achieving prescribed results")
    _add_common(p)
    p.add_argument("--instance", help='JSON {"weights": [...], "targets": [...], "orbit": id}')
    p.add_argument("--weights-file", dest="weights_file", help="JSON list of weight vectors")
    p.add_argument("--targets", help="JSON list of target vectors")
    p.add_argument("--orbit", help="orbit id or figN alias (overrides the instance)")
    p.set_defaults(func=cmd_paradox)

    p = sub.add_parser("param-count", help="parameters of a general per-orbit ranking rule")
    _add_common(p)
    p.set_defaults(func=cmd_param_count)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors; keep 2 for size guards only
        return EXIT_OK if exc.code in (0, None) else EXIT_BAD_INPUT
    try:
        return args.func(args)
    except SizeGuardError as exc:
        print(f"size guard: {exc}", file=sys.stderr)
        return EXIT_SIZE_GUARD
    except InfeasibleError as exc:
        print(f"infeasible: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except (WreathvoteError, ValueError, KeyError, OSError, json.JSONDecodeError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT


if __name__ == "__main__":
    raise SystemExit(main())
