"""The compiled orbit kernel and its pure-Python twin must agree exactly."""

import pytest

from wreathvote import _orbitpy
from wreathvote import combinatorics as cb

try:
    from wreathvote import _orbitcore
except ImportError:
    _orbitcore = None


@pytest.mark.parametrize("m, n", [(1, 1), (2, 1), (2, 2), (3, 1), (2, 3)])
def test_kernels_identical(m, n):
    perms = cb.committee_permutations(m, n)
    ids_py, reps_py = _orbitpy.partition_rankings(m**n, perms)
    if _orbitcore is None:
        pytest.skip("compiled kernel not built")
    ids_c, reps_c = _orbitcore.partition_rankings(m**n, perms)
    assert list(ids_c) == list(ids_py)
    assert list(reps_c) == list(reps_py)


def test_selected_kernel_reported():
    assert cb.KERNEL in ("compiled", "python")


def test_partition_is_complete_and_balanced():
    perms = cb.committee_permutations(2, 2)
    ids, reps = _orbitpy.partition_rankings(4, perms)
    assert len(ids) == 24
    assert sorted(set(ids)) == [0, 1, 2]
    assert [list(ids).count(o) for o in range(3)] == [8, 8, 8]
    # representatives are the lex-least member of each orbit, in order
    assert reps == sorted(reps)


def test_representative_is_orbit_minimum():
    perms = cb.committee_permutations(2, 2)
    ids, reps = _orbitpy.partition_rankings(4, perms)
    import itertools

    rankings = list(itertools.permutations(range(4)))
    for oid, rep_index in enumerate(reps):
        members = [rankings[i] for i in range(24) if ids[i] == oid]
        assert rankings[rep_index] == min(members)
