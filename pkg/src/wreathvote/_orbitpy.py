"""Pure-Python orbit-partition kernel.

Fallback twin of the compiled ``_orbitcore`` extension, selected at import
time by :mod:`wreathvote.combinatorics` when the extension is missing.
Same contract, same outputs; rankings are handled as byte strings so the
composition step runs through ``bytes.translate``.
"""

import array
import itertools


def partition_rankings(nitems, gperms):
    """Partition all nitems! rankings (lex order) into group orbits.

    ``gperms`` holds one permutation of ``range(nitems)`` per group
    element (the induced relabelling of committees).  Returns
    ``(orbit_ids, reps)``: ``orbit_ids[i]`` is the orbit id of the i-th
    ranking in lexicographic order, ``reps[k]`` the lex index of the
    k-th orbit's representative (its lexicographically smallest member).
    """
    if nitems < 1:
        raise ValueError("nitems must be positive")
    tail = bytes(range(nitems, 256))
    tables = [bytes(p) + tail for p in gperms]
    all_perms = [bytes(p) for p in itertools.permutations(range(nitems))]
    index_of = {p: i for i, p in enumerate(all_perms)}
    orbit_ids = array.array("q", [-1]) * len(all_perms)
    reps = []
    oid = 0
    for i, p in enumerate(all_perms):
        if orbit_ids[i] >= 0:
            continue
        reps.append(i)
        for t in tables:
            orbit_ids[index_of[p.translate(t)]] = oid
        oid += 1
    return orbit_ids, reps
