"""Matrices over F_q and F_{q^s}.

MatFq wraps a 2-D galois array. MatFqs wraps a (rows, cols, s) galois array
of power-basis coordinates over F_q, together with the tower those
coordinates refer to. Both are immutable values; operations return new
matrices.
"""
from dataclasses import dataclass

import galois
import numpy as np

from cbpir_lab.exceptions import DimensionMismatchError
from gf.tower import FieldTower


@dataclass(frozen=True, eq=False)
class MatFq:
    data: galois.FieldArray

    def __post_init__(self):
        if not isinstance(self.data, galois.FieldArray) or self.data.ndim != 2:
            raise DimensionMismatchError("MatFq needs a 2-D galois array")

    @classmethod
    def zeros(cls, field, rows, cols):
        return cls(field.Zeros((rows, cols)))

    @classmethod
    def identity(cls, field, size):
        return cls(field.Identity(size))

    @classmethod
    def random(cls, field, rows, cols, rng):
        return cls(field.Random((rows, cols), seed=rng))

    @classmethod
    def row(cls, field, values):
        return cls(field(values).reshape(1, -1))

    @property
    def field(self):
        return type(self.data)

    @property
    def rows(self):
        return self.data.shape[0]

    @property
    def cols(self):
        return self.data.shape[1]

    @property
    def shape(self):
        return self.data.shape

    def transpose(self):
        return MatFq(self.data.T.copy())

    def weight(self):
        return int(np.count_nonzero(self.data))

    def support(self):
        return tuple(int(i) for i in np.flatnonzero(self.data.view(np.ndarray)))

    def __eq__(self, other):
        if not isinstance(other, MatFq):
            return NotImplemented
        return self.field is other.field and np.array_equal(self.data, other.data)

    __hash__ = None

    def __add__(self, other):
        from .algebra import add
        return add(self, other)

    def __matmul__(self, other):
        from .algebra import mul
        return mul(self, other)

    def __repr__(self):
        return f"MatFq({self.rows}x{self.cols} over GF({self.field.order}))"


@dataclass(frozen=True, eq=False)
class MatFqs:
    tower: FieldTower
    data: galois.FieldArray

    def __post_init__(self):
        if self.data.ndim != 3 or self.data.shape[2] != self.tower.s:
            raise DimensionMismatchError(
                f"MatFqs needs a (rows, cols, {self.tower.s}) coordinate array, got {self.data.shape}"
            )

    @classmethod
    def zeros(cls, tower, rows, cols):
        return cls(tower, tower.zeros((rows, cols)))

    @classmethod
    def identity(cls, tower, size):
        data = tower.zeros((size, size))
        data[np.arange(size), np.arange(size), 0] = 1
        return cls(tower, data)

    @classmethod
    def random(cls, tower, rows, cols, rng):
        return cls(tower, tower.random((rows, cols), rng))

    @property
    def rows(self):
        return self.data.shape[0]

    @property
    def cols(self):
        return self.data.shape[1]

    @property
    def shape(self):
        return self.data.shape[:2]

    def transpose(self):
        return MatFqs(self.tower, self.data.transpose(1, 0, 2).copy())

    def column_support(self):
        """Columns holding at least one nonzero entry."""
        mask = np.any(self.data.view(np.ndarray) != 0, axis=(0, 2))
        return tuple(int(i) for i in np.flatnonzero(mask))

    def is_zero(self):
        return not np.any(self.data)

    def __eq__(self, other):
        if not isinstance(other, MatFqs):
            return NotImplemented
        return self.tower == other.tower and np.array_equal(self.data, other.data)

    __hash__ = None

    def __add__(self, other):
        from .algebra import add
        return add(self, other)

    def __sub__(self, other):
        from .algebra import add
        return add(self, MatFqs(other.tower, -other.data))

    def __matmul__(self, other):
        from .algebra import mul
        return mul(self, other)

    def __repr__(self):
        return f"MatFqs({self.rows}x{self.cols} over GF(2^{self.tower.b * self.tower.s}))"
