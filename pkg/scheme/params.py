"""Public protocol parameters.

SchemeParams follows the model `clean()` convention: every violated
constraint is reported in one django ValidationError keyed by the
parameter that breaks it.
"""
from dataclasses import asdict, dataclass

from django.core.exceptions import ValidationError

from gf.tower import FieldTower


@dataclass(frozen=True)
class SchemeParams:
    b: int
    s: int
    v: int
    n: int
    k: int
    m: int
    L: int
    f: int = 1
    weight_target: int = None

    @classmethod
    def validated(cls, **kwargs):
        params = cls(**kwargs)
        params.clean()
        return params

    @property
    def q(self):
        return 2 ** self.b

    @property
    def delta(self):
        return (self.n - self.k) * (self.s - self.v)

    @property
    def ns(self):
        return self.n * self.s

    @property
    def weight_goal(self):
        """Minimum weight every secret row of a plan must reach."""
        if self.weight_target is not None:
            return self.weight_target
        # over F_2 the single secret row m_1 = e^i + β always loses position i
        return self.m - self.f if self.q == 2 else self.m

    def clean(self):
        errors = {}
        if self.b < 1:
            errors['b'] = "q = 2^b needs b >= 1."
        if self.s < 2:
            errors['s'] = "the extension degree s must be at least 2."
        if not 0 < self.k < self.n:
            errors['k'] = f"code dimension must satisfy 0 < k < n (k={self.k}, n={self.n})."
        if not 0 < self.v < self.s:
            errors['v'] = f"split index must satisfy 0 < v < s (v={self.v}, s={self.s}); δ would be {self.delta}."
        if self.L < 1:
            errors['L'] = "files need at least one row."
        if not 1 <= self.f < self.m:
            errors['f'] = f"batch size must satisfy 1 <= f < m (f={self.f}, m={self.m})."
        elif self.b == 1 and self.f > 1:
            errors['f'] = ("M̃ feasibility: over q = 2 an all-nonzero f×(f+1) matrix "
                           "has full rank only for f = 1.")
        if self.weight_target is not None:
            if not 1 <= self.weight_target <= self.m:
                errors['weight_target'] = f"weight target must lie in [1, m] (m={self.m})."
            elif self.b == 1 and self.weight_target > self.m - self.f:
                errors['weight_target'] = f"over q = 2 secret rows have weight m - f = {self.m - self.f}."
        if errors:
            raise ValidationError(errors)

    def as_dict(self):
        return asdict(self)


@dataclass(frozen=True)
class ParamsFile:
    """A parsed ParamsFile: protocol parameters plus the experiment seeds."""
    params: SchemeParams
    seed: int = 0
    tower_seed: int = 0

    def tower(self):
        return FieldTower.from_seed(self.params.b, self.params.s, seed=self.tower_seed)

    def as_dict(self):
        document = self.params.as_dict()
        document.update(seed=self.seed, tower_seed=self.tower_seed)
        return document
