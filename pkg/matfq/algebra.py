"""Products, sums, the block-row Kronecker product and F_q-flattening."""
import logging

import numpy as np

from cbpir_lab.exceptions import DimensionMismatchError

from .matrices import MatFq, MatFqs

logger = logging.getLogger(__name__)


def _check_tower(a, c):
    if a.tower != c.tower:
        raise DimensionMismatchError("operands come from different field towers")


def _check_field(a_field, c_field):
    if a_field is not c_field:
        raise DimensionMismatchError(
            f"operands live over different base fields GF({a_field.order}) and GF({c_field.order})"
        )


def add(a, c):
    if type(a) is not type(c):
        raise DimensionMismatchError("cannot add an F_q matrix to an F_{q^s} matrix")
    if a.shape != c.shape:
        raise DimensionMismatchError(f"cannot add {a.shape} and {c.shape} matrices")
    if isinstance(a, MatFqs):
        _check_tower(a, c)
        return MatFqs(a.tower, a.data + c.data)
    _check_field(a.field, c.field)
    return MatFq(a.data + c.data)


def right_multiplication_matrix(a):
    """The (rows·s)×(cols·s) F_q matrix of u ↦ u·a on coordinate vectors.

    Block (r, c) is the multiplication matrix of a[r, c]; the map is a ring
    homomorphism, so products and inverses carry over block-wise.
    """
    s = a.tower.s
    blocks = a.tower.multiplication_matrices(a.data)
    return MatFq(blocks.transpose(0, 2, 1, 3).reshape(a.rows * s, a.cols * s))


def mul(a, c):
    """Matrix product; F_q matrices embed into F_{q^s} where they meet one."""
    if a.cols != c.rows:
        raise DimensionMismatchError(f"cannot multiply {a.shape} by {c.shape}")
    if isinstance(a, MatFq) and isinstance(c, MatFq):
        _check_field(a.field, c.field)
        return MatFq(a.data @ c.data)
    if isinstance(a, MatFq):
        _check_field(a.field, c.tower.field)
        s = c.tower.s
        flat = a.data @ c.data.reshape(c.rows, c.cols * s)
        return MatFqs(c.tower, flat.reshape(a.rows, c.cols, s))
    if isinstance(c, MatFq):
        _check_field(a.tower.field, c.field)
        s = a.tower.s
        stacked = a.data.transpose(0, 2, 1).reshape(a.rows * s, a.cols)
        product = (stacked @ c.data).reshape(a.rows, s, c.cols)
        return MatFqs(a.tower, product.transpose(0, 2, 1).copy())
    _check_tower(a, c)
    s = a.tower.s
    flat = a.data.reshape(a.rows, a.cols * s) @ right_multiplication_matrix(c).data
    return MatFqs(a.tower, flat.reshape(a.rows, c.cols, s))


class ScalarMultipleCache:
    """Memo of the scalar multiples c·Δ used by the Kronecker product.

    Every distinct nonzero scalar is multiplied out once, so a row with many
    entries costs at most q-1 multiplications of Δ.
    """

    def __init__(self, base):
        self.base = base
        self._multiples = {}

    def multiple(self, scalar):
        scalar = int(scalar)
        if scalar not in self._multiples:
            self._multiples[scalar] = self.base.tower.scale(self.base.data, scalar)
        return self._multiples[scalar]

    @property
    def unique(self):
        return len(self._multiples)

    def scalars(self):
        return sorted(self._multiples)


def kron(delta, vector, cache=None):
    """Block-row Kronecker product Δ⊗w: m·δ rows, block j equal to w_j·Δ."""
    if isinstance(vector, MatFq):
        if vector.rows != 1:
            raise DimensionMismatchError("Kronecker vector must be a single row")
        vector = vector.data[0]
    vector = delta.tower.field(vector)
    if cache is None:
        cache = ScalarMultipleCache(delta)
    elif cache.base is not delta:
        raise DimensionMismatchError("scalar-multiple cache belongs to another matrix")
    block_rows = delta.rows
    data = delta.tower.zeros((vector.size * block_rows, delta.cols))
    for j, coefficient in enumerate(vector.view(np.ndarray)):
        if coefficient:
            data[j * block_rows:(j + 1) * block_rows] = cache.multiple(coefficient)
    return MatFqs(delta.tower, data)


def flatten_fq(a, basis=None):
    """Rows of a as length cols·s vectors over F_q (Γ-coordinates when a basis is given)."""
    coords = basis.coordinates(a.data) if basis is not None else a.data
    return MatFq(coords.reshape(a.rows, a.cols * a.tower.s))


def delete_row_blocks(a, blocks, block_rows):
    """Drop the δ-row blocks listed in `blocks` (0-based), keeping the rest in order."""
    if a.rows % block_rows:
        raise DimensionMismatchError(f"{a.rows} rows do not split into blocks of {block_rows}")
    keep = np.ones(a.rows, dtype=bool)
    for j in blocks:
        keep[j * block_rows:(j + 1) * block_rows] = False
    if isinstance(a, MatFqs):
        return MatFqs(a.tower, a.data[keep])
    return MatFq(a.data[keep])


def row_block(a, index, block_rows):
    rows = slice(index * block_rows, (index + 1) * block_rows)
    if isinstance(a, MatFqs):
        return MatFqs(a.tower, a.data[rows].copy())
    return MatFq(a.data[rows].copy())


def select_columns(a, columns):
    columns = list(columns)
    if isinstance(a, MatFqs):
        return MatFqs(a.tower, a.data[:, columns].copy())
    return MatFq(a.data[:, columns].copy())
