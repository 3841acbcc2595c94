"""Exact linear algebra over Q(w) and its quadratic extensions.

Two engines share the same deterministic first-nonzero pivot rule:

* a generic RREF/nullspace over any exact field (duck-typed elements with
  +, -, *, / and truthiness), used for small systems where explicit null
  vectors are needed;
* a fraction-free (Bareiss) rank kernel over Z[w] for the large
  Hilbert-function and syzygy-dimension matrices.  Rows are
  denominator-cleared and content-stripped first, which changes neither rank
  nor pivot columns.

The Bareiss kernel runs on int64 numpy arrays while a per-step bound proves
no intermediate can overflow, and escalates the whole remaining elimination
to arbitrary-precision objects the moment it cannot.  Results are exact
either way; the int64 phase only changes speed.
"""

from __future__ import annotations

import os
import sys
from math import gcd
from typing import Sequence

import numpy as np
from gmpy2 import mpz

from .eisenstein import EisensteinNumber, ONE

_INT64_GUARD = 1 << 62


def _verbose() -> bool:
    return bool(os.environ.get("FREECURVES_ELIM_VERBOSE"))


def _trace(message: str) -> None:
    if _verbose():
        print(f"[elimination] {message}", file=sys.stderr)


def field_rref(rows: list[list[object]]) -> tuple[int, list[int], list[list[object]]]:
    """Reduced row echelon form in place; returns (rank, pivot columns, rows)."""
    if not rows:
        return 0, [], rows
    ncols = len(rows[0])
    rank = 0
    pivots: list[int] = []
    for col in range(ncols):
        pivot_row = None
        for i in range(rank, len(rows)):
            if rows[i][col]:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        rows[rank], rows[pivot_row] = rows[pivot_row], rows[rank]
        inv_pivot = rows[rank][col]
        rows[rank] = [v / inv_pivot for v in rows[rank]]
        for i in range(len(rows)):
            if i == rank:
                continue
            factor = rows[i][col]
            if factor:
                prow = rows[rank]
                rows[i] = [v - factor * pv for v, pv in zip(rows[i], prow)]
        pivots.append(col)
        rank += 1
        if rank == len(rows):
            break
    return rank, pivots, rows


def field_nullspace(
    rows: Sequence[Sequence[object]], ncols: int, one: object
) -> list[list[object]]:
    """Deterministic nullspace basis, one vector per free column (ascending)."""
    work = [list(r) for r in rows]
    zero = one - one
    if not work:
        return [
            [one if j == k else zero for j in range(ncols)] for k in range(ncols)
        ]
    rank, pivots, reduced = field_rref(work)
    pivot_set = set(pivots)
    basis: list[list[object]] = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        vec = [zero] * ncols
        vec[free] = one
        for r, pc in enumerate(pivots):
            coeff = reduced[r][free]
            if coeff:
                vec[pc] = zero - coeff
        basis.append(vec)
    return basis


def field_rank(rows: Sequence[Sequence[object]]) -> int:
    work = [list(r) for r in rows]
    rank, _, _ = field_rref(work)
    return rank


# -- fraction-free integer kernel ---------------------------------------------


def _clear_rows(
    rows: Sequence[Sequence[EisensteinNumber]],
) -> tuple[list[list[int]], list[list[int]], bool]:
    """Scale each row to Z[w] and strip integer content; preserves rank."""
    re_rows: list[list[int]] = []
    wc_rows: list[list[int]] = []
    any_omega = False
    for row in rows:
        denom = 1
        for v in row:
            denom = denom * v.re.denominator // gcd(denom, v.re.denominator)
            denom = denom * v.wc.denominator // gcd(denom, v.wc.denominator)
        re_ints = [int(v.re * denom) for v in row]
        wc_ints = [int(v.wc * denom) for v in row]
        content = 0
        for a in re_ints:
            content = gcd(content, a)
        for b in wc_ints:
            content = gcd(content, b)
        if content > 1:
            re_ints = [a // content for a in re_ints]
            wc_ints = [b // content for b in wc_ints]
        if not any_omega and any(wc_ints):
            any_omega = True
        re_rows.append(re_ints)
        wc_rows.append(wc_ints)
    return re_rows, wc_rows, any_omega


_to_mpz = np.frompyfunc(mpz, 1, 1)

# gmpy2 integers only beat Python ints once entries get genuinely large;
# below this bit size plain objects are faster in the elimination loops
_MPZ_THRESHOLD_BITS = 256


def _make_array(rows: list[list[int]]) -> np.ndarray:
    """int64 array when every entry fits comfortably, else objects."""
    top = max((max(map(abs, r)) for r in rows), default=0)
    if top < _INT64_GUARD:
        return np.array(rows, dtype=np.int64)
    arr = np.array(rows, dtype=object)
    return _to_mpz(arr) if top.bit_length() > _MPZ_THRESHOLD_BITS else arr


def _escalate(arr: np.ndarray) -> np.ndarray:
    return arr.astype(object)


def _absmax(a: np.ndarray) -> int:
    return int(np.abs(a).max()) if a.size else 0


def _entries_outgrew_ints(a: np.ndarray, rank: int, col: int) -> bool:
    block = a[rank:, col:]
    if not block.size:
        return False
    return int(np.abs(block).max()).bit_length() > _MPZ_THRESHOLD_BITS


def _bareiss_rank_int(A: np.ndarray) -> tuple[int, list[int]]:
    m, n = A.shape
    rank = 0
    prev = 1
    pivots: list[int] = []
    exact_mode = A.dtype == object
    mpz_mode = exact_mode and A.size and isinstance(A.flat[0], type(mpz(0)))
    for col in range(n):
        if rank == m:
            break
        if exact_mode and not mpz_mode and rank % 24 == 0:
            if _entries_outgrew_ints(A, rank, col):
                A = _to_mpz(A)
                mpz_mode = True
        nz = np.flatnonzero(A[rank:, col] != 0)
        if nz.size == 0:
            continue
        i = rank + int(nz[0])
        if i != rank:
            A[[rank, i]] = A[[i, rank]]
        piv = int(A[rank, col])
        if rank + 1 < m and col + 1 < n:
            if not exact_mode:
                # |piv*x - c*r| <= |piv|*max|block| + max|col|*max|row|; the
                # final division only shrinks values, so this bounds storage
                bound = abs(piv) * _absmax(A[rank + 1 :, col + 1 :]) + _absmax(
                    A[rank + 1 :, col]
                ) * _absmax(A[rank, col + 1 :])
                if bound >= _INT64_GUARD:
                    A = _escalate(A)
                    exact_mode = True
            block = A[rank + 1 :, col + 1 :]
            colv = A[rank + 1 :, col : col + 1]
            prow = A[rank : rank + 1, col + 1 :]
            upd = piv * block - colv * prow
            if prev != 1:
                upd //= prev
            A[rank + 1 :, col + 1 :] = upd
        prev = piv
        pivots.append(col)
        rank += 1
    return rank, pivots


def _bareiss_rank_eis(A: np.ndarray, B: np.ndarray) -> tuple[int, list[int]]:
    """Bareiss over Z[w]; (A, B) hold the 1- and w-components."""
    m, n = A.shape
    rank = 0
    prev_a, prev_b = 1, 0
    pivots: list[int] = []
    exact_mode = A.dtype == object
    mpz_mode = exact_mode and A.size and isinstance(A.flat[0], type(mpz(0)))
    for col in range(n):
        if rank == m:
            break
        if exact_mode and not mpz_mode and rank % 24 == 0:
            if _entries_outgrew_ints(A, rank, col) or _entries_outgrew_ints(
                B, rank, col
            ):
                A, B = _to_mpz(A), _to_mpz(B)
                mpz_mode = True
        sub_a = A[rank:, col]
        sub_b = B[rank:, col]
        nz = np.flatnonzero((sub_a != 0) | (sub_b != 0))
        if nz.size == 0:
            continue
        i = rank + int(nz[0])
        if i != rank:
            A[[rank, i]] = A[[i, rank]]
            B[[rank, i]] = B[[i, rank]]
        pa = int(A[rank, col])
        pb = int(B[rank, col])
        if rank + 1 < m and col + 1 < n:
            if not exact_mode:
                # coarse bound over both components of
                # (piv*block - colv*pivrow) * conj(prev) / norm(prev)
                p = max(abs(pa), abs(pb))
                mb = max(
                    _absmax(A[rank + 1 :, col + 1 :]),
                    _absmax(B[rank + 1 :, col + 1 :]),
                )
                q = max(_absmax(A[rank + 1 :, col]), _absmax(B[rank + 1 :, col]))
                r = max(_absmax(A[rank, col + 1 :]), _absmax(B[rank, col + 1 :]))
                z = max(abs(prev_a), abs(prev_b), 1)
                # second clause keeps norm(prev) ~ 3z^2 inside int64 for the
                # exact division below
                if 9 * z * (p * mb + q * r) >= _INT64_GUARD or z > (1 << 30):
                    A = _escalate(A)
                    B = _escalate(B)
                    exact_mode = True
            blk_a = A[rank + 1 :, col + 1 :]
            blk_b = B[rank + 1 :, col + 1 :]
            col_a = A[rank + 1 :, col : col + 1]
            col_b = B[rank + 1 :, col : col + 1]
            row_a = A[rank : rank + 1, col + 1 :]
            row_b = B[rank : rank + 1, col + 1 :]
            ta = (pa * blk_a - pb * blk_b) - (col_a * row_a - col_b * row_b)
            tb = (pa * blk_b + pb * (blk_a - blk_b)) - (
                col_a * row_b + col_b * (row_a - row_b)
            )
            if prev_b == 0:
                if prev_a != 1:
                    ta //= prev_a
                    tb //= prev_a
            else:
                # divide by prev_a + prev_b*w: multiply by the conjugate,
                # then by 1/norm; both divisions are exact
                ca = prev_a - prev_b
                nrm = prev_a * prev_a - prev_a * prev_b + prev_b * prev_b
                qa = ta * ca + tb * prev_b
                qb = tb * prev_a - ta * prev_b
                ta = qa // nrm
                tb = qb // nrm
            A[rank + 1 :, col + 1 :] = ta
            B[rank + 1 :, col + 1 :] = tb
        prev_a, prev_b = pa, pb
        pivots.append(col)
        rank += 1
    return rank, pivots


def eis_rank_profile(
    rows: Sequence[Sequence[EisensteinNumber]],
) -> tuple[int, tuple[int, ...]]:
    """Exact rank and pivot columns of a matrix over Q(w)."""
    if not rows or not len(rows[0]):
        return 0, ()
    re_rows, wc_rows, any_omega = _clear_rows(rows)
    A = _make_array(re_rows)
    if any_omega:
        B = _make_array(wc_rows)
        if A.dtype != B.dtype:
            A, B = _escalate(A), _escalate(B)
        rank, pivots = _bareiss_rank_eis(A, B)
    else:
        rank, pivots = _bareiss_rank_int(A)
    return rank, tuple(pivots)


def eis_rank(rows: Sequence[Sequence[EisensteinNumber]]) -> int:
    return eis_rank_profile(rows)[0]


def eis_rank_from_pairs(
    re_rows: list[list[int]], wc_rows: list[list[int]] | None
) -> int:
    """Rank for integer-pair input built directly by callers (no Fractions)."""
    if not re_rows or not re_rows[0]:
        return 0
    A = _make_array(re_rows)
    if wc_rows is not None and any(any(r) for r in wc_rows):
        B = _make_array(wc_rows)
        if A.dtype != B.dtype:
            A, B = _escalate(A), _escalate(B)
        rank, pivots = _bareiss_rank_eis(A, B)
        _trace(
            f"{len(re_rows)}x{len(re_rows[0])} over Z[w]: rank {rank}, "
            f"{len(pivots)} pivots"
        )
        return rank
    rank, pivots = _bareiss_rank_int(A)
    _trace(
        f"{len(re_rows)}x{len(re_rows[0])} over Z: rank {rank}, "
        f"{len(pivots)} pivots"
    )
    return rank


class ExactMatrix:
    """Immutable exact matrix over Q(w) with reproducible elimination.

    Rank and nullspace use the first-nonzero pivot rule, so repeated runs on
    equal inputs give identical pivot profiles.
    """

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries: Sequence[Sequence[object]]) -> None:
        coerced: list[tuple[EisensteinNumber, ...]] = []
        width = None
        for row in entries:
            vals = []
            for v in row:
                e = EisensteinNumber._coerce(v)
                if e is None:
                    raise TypeError("ExactMatrix entries must be scalars over Q(w)")
                vals.append(e)
            if width is None:
                width = len(vals)
            elif len(vals) != width:
                raise ValueError("ragged matrix")
            coerced.append(tuple(vals))
        object.__setattr__(self, "entries", tuple(coerced))
        object.__setattr__(self, "rows", len(coerced))
        object.__setattr__(self, "cols", width or 0)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("ExactMatrix is immutable")

    def rank(self) -> int:
        return eis_rank(self.entries)

    def pivot_profile(self) -> tuple[int, tuple[int, ...]]:
        return eis_rank_profile(self.entries)

    def nullspace(self) -> list[list[EisensteinNumber]]:
        return field_nullspace(self.entries, self.cols, ONE)

    def nullity(self) -> int:
        return self.cols - self.rank()
