"""Gaussian elimination over F_q: rank, inverse, kernel, solve.

`ops` counts multiply-accumulate steps of row updates: each row update
from pivot column c on a matrix with `cols` columns costs cols - c. Over
F_2 rows are packed into Python integers and eliminated word-at-a-time.
"""
import logging
from dataclasses import dataclass

import galois
import numpy as np

from cbpir_lab.exceptions import DimensionMismatchError, SingularMatrixError

from .algebra import right_multiplication_matrix
from .matrices import MatFq, MatFqs

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Elimination:
    rank: int
    pivots: tuple
    ops: int
    echelon: galois.FieldArray = None


def _pack_rows(data):
    packed = np.packbits(data.view(np.ndarray).astype(np.uint8), axis=1, bitorder='little')
    return [int.from_bytes(row.tobytes(), 'little') for row in packed]


def _eliminate_binary(data):
    rows = _pack_rows(data)
    cols = data.shape[1]
    rank, ops, pivots = 0, 0, []
    for col in range(cols):
        if rank == len(rows):
            break
        bit = 1 << col
        pivot = next((r for r in range(rank, len(rows)) if rows[r] & bit), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        for r in range(rank + 1, len(rows)):
            if rows[r] & bit:
                rows[r] ^= rows[rank]
                ops += cols - col
        pivots.append(col)
        rank += 1
    return Elimination(rank=rank, pivots=tuple(pivots), ops=ops)


def row_reduce(data, reduced=False):
    """Row echelon form of a 2-D galois array; reduced=True clears above pivots too."""
    work = data.copy()
    rows, cols = work.shape
    rank, ops, pivots = 0, 0, []
    for col in range(cols):
        if rank == rows:
            break
        candidates = np.flatnonzero(work[rank:, col].view(np.ndarray))
        if candidates.size == 0:
            continue
        pivot = rank + int(candidates[0])
        if pivot != rank:
            work[[rank, pivot]] = work[[pivot, rank]]
        pivot_row = work[rank] / work[rank, col]
        work[rank] = pivot_row
        column = work[:, col].view(np.ndarray)
        targets = np.flatnonzero(column) if reduced else rank + 1 + np.flatnonzero(column[rank + 1:])
        targets = targets[targets != rank]
        if targets.size:
            factors = work[targets, col][:, np.newaxis]
            work[targets] = work[targets] - factors * pivot_row[np.newaxis, :]
            ops += int(targets.size) * (cols - col)
        pivots.append(col)
        rank += 1
    return Elimination(rank=rank, pivots=tuple(pivots), ops=ops, echelon=work)


def eliminate(a):
    """Rank and operation count of an F_q matrix."""
    if a.rows == 0 or a.cols == 0:
        return Elimination(rank=0, pivots=(), ops=0)
    if a.field.order == 2:
        return _eliminate_binary(a.data)
    result = row_reduce(a.data)
    return Elimination(rank=result.rank, pivots=result.pivots, ops=result.ops)


def rank_fq(a):
    return eliminate(a).rank


def invert_fq(a):
    if a.rows != a.cols:
        raise DimensionMismatchError(f"only square matrices invert, got {a.shape}")
    size = a.rows
    augmented = a.field.Zeros((size, 2 * size))
    augmented[:, :size] = a.data
    augmented[:, size:] = a.field.Identity(size)
    result = row_reduce(augmented, reduced=True)
    if result.pivots[:size] != tuple(range(size)):
        raise SingularMatrixError(f"{size}x{size} matrix is singular over GF({a.field.order})")
    return MatFq(result.echelon[:, size:].copy())


def kernel_fq(a):
    """Rows spanning {x : a·xᵀ = 0}."""
    result = row_reduce(a.data, reduced=True)
    free = [c for c in range(a.cols) if c not in result.pivots]
    basis = a.field.Zeros((len(free), a.cols))
    for row, column in enumerate(free):
        basis[row, column] = 1
        for pivot_row, pivot_col in enumerate(result.pivots):
            basis[row, pivot_col] = -result.echelon[pivot_row, column]
    return MatFq(basis)


def solve_fq(a, rhs):
    """x with x·a = rhs for invertible a."""
    if rhs.cols != a.rows:
        raise DimensionMismatchError(f"cannot solve x·{a.shape} = {rhs.shape}")
    return MatFq(rhs.data @ invert_fq(a).data)


def rank_fqs(a):
    """Rank over F_{q^s}, read off the F_q right-multiplication representation."""
    return rank_fq(right_multiplication_matrix(a)) // a.tower.s


def invert_fqs(a):
    if a.rows != a.cols:
        raise DimensionMismatchError(f"only square matrices invert, got {a.shape}")
    s = a.tower.s
    inverse = invert_fq(right_multiplication_matrix(a))
    # row r·s of block (r, c) is the coordinate vector of the inverse entry
    return MatFqs(a.tower, inverse.data[::s].reshape(a.rows, a.cols, s).copy())
