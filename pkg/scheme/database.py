"""The server's plaintext content X (L × mδ over F_q); file j is column block j."""
import logging
from dataclasses import dataclass

from cbpir_lab.exceptions import DimensionMismatchError
from matfq.algebra import select_columns
from matfq.matrices import MatFq

from .params import SchemeParams

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class Database:
    params: SchemeParams
    content: MatFq

    def __post_init__(self):
        expected = (self.params.L, self.params.m * self.params.delta)
        if self.content.shape != expected:
            raise DimensionMismatchError(f"database must be {expected}, got {self.content.shape}")

    @classmethod
    def random(cls, params, field, rng):
        db = cls(params, MatFq.random(field, params.L, params.m * params.delta, rng))
        logger.info("random database: %d files of %dx%d over GF(%d)",
                    params.m, params.L, params.delta, field.order)
        return db

    @property
    def field(self):
        return self.content.field

    def file(self, j):
        if not 0 <= j < self.params.m:
            raise IndexError(f"file index {j} outside [0, {self.params.m})")
        width = self.params.delta
        return select_columns(self.content, range(j * width, (j + 1) * width))

    def combination(self, weights):
        """Plaintext Σ_j w_j X^j for an F_q row w."""
        if isinstance(weights, MatFq):
            weights = weights.data[0]
        weights = self.field(weights)
        if weights.size != self.params.m:
            raise DimensionMismatchError(f"combination needs {self.params.m} weights, got {weights.size}")
        total = self.field.Zeros((self.params.L, self.params.delta))
        for j in range(self.params.m):
            if weights[j] != 0:
                total = total + weights[j] * self.file(j).data
        return MatFq(total)
