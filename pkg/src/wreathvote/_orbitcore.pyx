# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled orbit-partition kernel.

Hot loop of the package: sweeping all nitems! rankings in lexicographic
order and closing each unseen one under the group's committee
relabellings.  Rankings are indexed by their Lehmer rank so the seen/id
bookkeeping is a flat array.  The pure-Python twin lives in
``wreathvote._orbitpy``.
"""

import array

from cpython cimport array as carray
from libc.stdlib cimport free, malloc


cdef long long _factorial(int n):
    cdef long long f = 1
    cdef int i
    for i in range(2, n + 1):
        f *= i
    return f


def partition_rankings(int nitems, gperms):
    """Partition all nitems! rankings (lex order) into group orbits.

    Same contract as ``wreathvote._orbitpy.partition_rankings``.
    """
    if nitems < 1 or nitems > 12:
        raise ValueError("kernel supports 1..12 ranked items")
    cdef int N = nitems
    cdef int G = len(gperms)
    cdef long long total = _factorial(N)
    cdef long long idx, j, oid
    cdef int i, pos, a, b, smaller, pivot, left, right

    cdef carray.array gflat = array.array("i", [v for p in gperms for v in p])
    cdef int[::1] gp = gflat

    cdef long long fact[13]
    fact[0] = 1
    for i in range(1, 13):
        fact[i] = fact[i - 1] * i

    cdef carray.array ids_arr = array.array("q", bytes(8 * total))
    cdef long long[::1] ids = ids_arr
    for idx in range(total):
        ids[idx] = -1

    cdef int *cur = <int *> malloc(N * sizeof(int))
    cdef int *img = <int *> malloc(N * sizeof(int))
    if cur == NULL or img == NULL:
        if cur != NULL:
            free(cur)
        if img != NULL:
            free(img)
        raise MemoryError()

    reps = []
    oid = 0
    try:
        for i in range(N):
            cur[i] = i
        idx = 0
        while True:
            if ids[idx] < 0:
                reps.append(idx)
                for i in range(G):
                    for pos in range(N):
                        img[pos] = gp[i * N + cur[pos]]
                    # Lehmer rank of img
                    j = 0
                    for a in range(N):
                        smaller = 0
                        for b in range(a + 1, N):
                            if img[b] < img[a]:
                                smaller += 1
                        j += smaller * fact[N - 1 - a]
                    ids[j] = oid
                oid += 1
            # advance cur to the next permutation in lex order
            pivot = N - 2
            while pivot >= 0 and cur[pivot] >= cur[pivot + 1]:
                pivot -= 1
            if pivot < 0:
                break
            right = N - 1
            while cur[right] <= cur[pivot]:
                right -= 1
            cur[pivot], cur[right] = cur[right], cur[pivot]
            left = pivot + 1
            right = N - 1
            while left < right:
                cur[left], cur[right] = cur[right], cur[left]
                left += 1
                right -= 1
            idx += 1
    finally:
        free(cur)
        free(img)
    return ids_arr, reps
