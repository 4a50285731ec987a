"""Exact linear algebra over the rationals.

Vectors are tuples of :class:`fractions.Fraction`, matrices are tuples of
row tuples.  All operations are exact: no floats are ever introduced, so
equality tests are decidable and every decomposition reconstructs its
input bit for bit.

``rank`` first tries a fraction-free integer elimination vectorised with
numpy (entries are bounds-checked so machine arithmetic stays exact, with
gcd stripping to control growth); matrices that do not fit fall back to
plain Fraction elimination.  ``nullspace``/``solve`` use deterministic
reduced row echelon form with first-nonzero pivoting, and
``project_onto_span`` solves the normal equations so redundant or
dependent spanning sets are fine.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from .errors import InconsistentSystemError

Vec = tuple[Fraction, ...]
Mat = tuple[Vec, ...]

# Bound on |entry| for the vectorised int64 elimination; products of two
# bounded entries plus one addition stay below 2^63.
_INT64_SAFE = 1 << 30


def as_rational(value) -> Fraction:
    """Coerce ints, Fractions and "p/q" strings to an exact Fraction.

    Floats are converted through their shortest decimal repr, so JSON
    values like 7.5 mean exactly 15/2.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        return Fraction(repr(value))
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot interpret {value!r} as a rational")


def as_vector(values: Iterable) -> Vec:
    return tuple(as_rational(v) for v in values)


def as_matrix(rows: Iterable[Iterable]) -> Mat:
    mat = tuple(as_vector(row) for row in rows)
    if mat:
        width = len(mat[0])
        for row in mat:
            if len(row) != width:
                raise ValueError("inconsistent row width")
    return mat


def zero_vector(dim: int) -> Vec:
    return (Fraction(0),) * dim


def dot(u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
    return sum((a * b for a, b in zip(u, v, strict=True)), Fraction(0))


def vec_add(u: Sequence[Fraction], v: Sequence[Fraction]) -> Vec:
    return tuple(a + b for a, b in zip(u, v, strict=True))


def vec_sub(u: Sequence[Fraction], v: Sequence[Fraction]) -> Vec:
    return tuple(a - b for a, b in zip(u, v, strict=True))


def vec_scale(c: Fraction, v: Sequence[Fraction]) -> Vec:
    return tuple(c * a for a in v)


def matvec(mat: Sequence[Sequence[Fraction]], v: Sequence[Fraction]) -> Vec:
    return tuple(dot(row, v) for row in mat)


def transpose(mat: Sequence[Sequence[Fraction]]) -> Mat:
    return tuple(zip(*mat)) if mat else ()


def rref(mat: Iterable[Iterable]) -> tuple[Mat, tuple[int, ...]]:
    """Reduced row echelon form and pivot columns, via exact elimination.

    Pivoting is deterministic: the first row with a nonzero entry in the
    current column is used, so identical inputs give identical bases.
    """
    rows = [list(as_vector(r)) for r in mat]
    if not rows:
        return (), ()
    ncols = len(rows[0])
    pivots = []
    r = 0
    for c in range(ncols):
        if r == len(rows):
            break
        pivot_row = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    return tuple(tuple(row) for row in rows), tuple(pivots)


def _as_bounded_int_array(mat: Mat) -> np.ndarray | None:
    """Row-scale a rational matrix to integers if everything fits int64."""
    rows = []
    for row in mat:
        scale = math.lcm(*(x.denominator for x in row)) if row else 1
        ints = [int(x * scale) for x in row]
        if any(abs(v) > _INT64_SAFE for v in ints):
            return None
        rows.append(ints)
    return np.array(rows, dtype=np.int64)


def _int_rank(a: np.ndarray) -> int | None:
    """Fraction-free elimination over int64; None if entries outgrow bounds."""
    nrows, ncols = a.shape
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        col = a[r:, c]
        nz = np.nonzero(col)[0]
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            a[[r, piv]] = a[[piv, r]]
        pivot_row = a[r].copy()
        p = int(pivot_row[c])
        below = a[r + 1 :]
        mask = below[:, c] != 0
        if mask.any():
            if (
                abs(p) > _INT64_SAFE
                or np.abs(pivot_row).max() > _INT64_SAFE
                or np.abs(below[mask]).max() > _INT64_SAFE
            ):
                return None
            factors = below[mask][:, c : c + 1].copy()
            updated = below[mask] * p - factors * pivot_row
            g = np.gcd.reduce(np.abs(updated), axis=1)
            g[g == 0] = 1
            below[mask] = updated // g[:, None]
        r += 1
    return r


def rank(mat: Iterable[Iterable]) -> int:
    """Exact rank over the rationals."""
    m = as_matrix(mat)
    if not m or not m[0]:
        return 0
    ints = _as_bounded_int_array(m)
    if ints is not None:
        result = _int_rank(ints)
        if result is not None:
            return result
    _, pivots = rref(m)
    return len(pivots)


def nullspace(mat: Iterable[Iterable]) -> list[Vec]:
    """Deterministic basis of the right nullspace (empty if injective).

    Each basis vector has a 1 in one free column and the negated RREF
    entries in the pivot columns.
    """
    m = as_matrix(mat)
    if not m:
        return []
    ncols = len(m[0])
    reduced, pivots = rref(m)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for i, p in enumerate(pivots):
            v[p] = -reduced[i][f]
        basis.append(tuple(v))
    return basis


def solve(mat: Iterable[Iterable], rhs: Iterable) -> Vec:
    """One exact solution of ``mat @ x = rhs``; free variables are set to 0.

    Raises :class:`InconsistentSystemError` when ``rhs`` lies outside the
    column space.
    """
    m = as_matrix(mat)
    b = as_vector(rhs)
    if len(m) != len(b):
        raise InconsistentSystemError(f"matrix has {len(m)} rows but rhs has {len(b)}")
    if not m:
        return ()
    ncols = len(m[0])
    augmented = tuple(row + (bi,) for row, bi in zip(m, b))
    reduced, pivots = rref(augmented)
    if ncols in pivots:
        raise InconsistentSystemError("rhs is not in the column space")
    x = [Fraction(0)] * ncols
    for i, p in enumerate(pivots):
        x[p] = reduced[i][ncols]
    return tuple(x)


def project_onto_span(basis: Sequence[Iterable], v: Iterable) -> Vec:
    """Orthogonal projection of ``v`` onto the span of ``basis``.

    Solves the normal equations exactly; the spanning set may be
    redundant or linearly dependent (any particular solution yields the
    same projection).  The residual ``v - result`` is orthogonal to every
    basis vector.
    """
    vv = as_vector(v)
    vecs = [as_vector(b) for b in basis]
    for b in vecs:
        if len(b) != len(vv):
            raise InconsistentSystemError("spanning vectors and target differ in dimension")
    if not vecs:
        return zero_vector(len(vv))
    gram = tuple(tuple(dot(bi, bj) for bj in vecs) for bi in vecs)
    rhs = tuple(dot(bi, vv) for bi in vecs)
    coeffs = solve(gram, rhs)
    out = zero_vector(len(vv))
    for c, b in zip(coeffs, vecs):
        if c != 0:
            out = vec_add(out, vec_scale(c, b))
    return out
