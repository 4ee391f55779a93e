"""Bases Γ of F_{q^s} over F_q and the split V ⊕ W.

Γ is kept as the s×s matrix whose row i holds the power-basis coordinates
of γ_{i+1}; its inverse maps power coordinates to Γ-coordinates. V is
spanned by the first v basis vectors and W by the rest, so ψ_V and ψ_W
zero a slice of the Γ-coordinates.
"""
import logging
from dataclasses import dataclass

import galois
import numpy as np

from cbpir_lab.exceptions import SingularMatrixError

from .tower import FieldTower

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class BasisGamma:
    tower: FieldTower
    gamma: galois.FieldArray
    change_of_basis: galois.FieldArray
    v: int

    @classmethod
    def from_gamma(cls, tower, gamma, v):
        if not 0 < v < tower.s:
            raise ValueError(f"split index v must satisfy 0 < v < {tower.s}, got {v}")
        gamma = tower.field(gamma)
        if gamma.shape != (tower.s, tower.s):
            raise ValueError("Γ must be an s×s matrix over F_q")
        if np.linalg.det(gamma) == 0:
            raise SingularMatrixError("Γ is not a basis of F_{q^s} over F_q")
        return cls(tower=tower, gamma=gamma, change_of_basis=np.linalg.inv(gamma), v=v)

    @classmethod
    def identity(cls, tower, v):
        """The power basis itself: γ_i = x^{i-1}."""
        return cls.from_gamma(tower, tower.field.Identity(tower.s), v)

    @property
    def s(self):
        return self.tower.s

    @property
    def w_dim(self):
        return self.s - self.v

    def element(self, index):
        """γ_{index+1} in power coordinates."""
        return self.gamma[index].copy()

    def coordinates(self, x):
        return self.tower.transform(x, self.change_of_basis)

    def from_coordinates(self, coords):
        return self.tower.transform(coords, self.gamma)

    def project_v(self, x):
        coords = self.coordinates(x)
        coords[..., self.v:] = 0
        return self.from_coordinates(coords)

    def project_w(self, x):
        coords = self.coordinates(x)
        coords[..., :self.v] = 0
        return self.from_coordinates(coords)

    def w_coordinates(self, x):
        """The s-v coordinates of x along γ_{v+1}, ..., γ_s."""
        return self.coordinates(x)[..., self.v:]

    def from_w_coordinates(self, coords):
        full = self.tower.field.Zeros(coords.shape[:-1] + (self.s,))
        full[..., self.v:] = coords
        return self.from_coordinates(full)

    def random_in_v(self, shape, rng):
        coords = self.tower.field.Zeros(tuple(shape) + (self.s,))
        coords[..., :self.v] = self.tower.field.Random(tuple(shape) + (self.v,), seed=rng)
        return self.from_coordinates(coords)

    def random_in_w(self, shape, rng):
        return self.from_w_coordinates(
            self.tower.field.Random(tuple(shape) + (self.w_dim,), seed=rng)
        )


def sample_basis(tower, v, rng):
    """Uniform basis by rejection sampling of random s×s matrices over F_q."""
    if not 0 < v < tower.s:
        raise ValueError(f"split index v must satisfy 0 < v < {tower.s}, got {v}")
    draws = 0
    while True:
        draws += 1
        gamma = tower.field.Random((tower.s, tower.s), seed=rng)
        if np.linalg.det(gamma) != 0:
            break
    logger.debug("basis sampled after %d draws", draws)
    return BasisGamma.from_gamma(tower, gamma, v)
