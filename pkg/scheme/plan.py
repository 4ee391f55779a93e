"""Secret combination plans for batches of f files.

A plan mixes the f requested unit vectors with a full-weight vector β
through an all-nonzero f×(f+1) matrix M̃; the rows it yields are the
secret rows of the f+1 queries of a batch.
"""
import logging
from dataclasses import dataclass

import numpy as np
from django.conf import settings

from cbpir_lab.exceptions import DimensionMismatchError, SamplingCapExceeded
from matfq.elimination import solve_fq
from matfq.matrices import MatFq

logger = logging.getLogger(__name__)


def _resample_cap():
    return settings.CBPIR.get('PLAN_RESAMPLE_CAP', 10_000)


@dataclass(frozen=True, eq=False)
class SecretPlan:
    indices: tuple
    mixing: MatFq
    beta: MatFq
    rows: MatFq

    @property
    def f(self):
        return len(self.indices)

    def secret_rows(self):
        """m_1, ..., m_f and finally β, each as a 1×m row."""
        return [MatFq(self.rows.data[r:r + 1].copy()) for r in range(self.rows.rows)]

    def weights(self):
        return [int(np.count_nonzero(row)) for row in self.rows.data[:self.f]]

    def combining_matrix(self):
        """M̃ stacked over (0, ..., 0, 1)."""
        field = self.mixing.field
        stacked = field.Zeros((self.f + 1, self.f + 1))
        stacked[:self.f] = self.mixing.data
        stacked[self.f, self.f] = 1
        return MatFq(stacked)


def _check_indices(params, indices):
    indices = tuple(int(j) for j in indices)
    if len(indices) != params.f or len(set(indices)) != len(indices):
        raise ValueError(f"a batch needs {params.f} distinct file indices, got {indices}")
    if any(not 0 <= j < params.m for j in indices):
        raise ValueError(f"file indices must lie in [0, {params.m}), got {indices}")
    return indices


def build_secret_plan(params, field, indices, rng, beta=None, cap=None):
    """Sample M̃ and β until every secret row reaches the weight goal.

    M̃ is redrawn until its left f×f block is invertible, which recovery
    needs. A given `beta` is kept across redraws so a stored β response
    stays usable.
    """
    indices = _check_indices(params, indices)
    cap = cap or _resample_cap()
    f, m = params.f, params.m
    if beta is not None:
        beta = field(beta.data[0] if isinstance(beta, MatFq) else beta)
        if beta.size != m or np.count_nonzero(beta) != m:
            raise DimensionMismatchError(f"β must be a full-weight row of length {m}")
    goal = params.weight_goal
    for attempt in range(1, cap + 1):
        mixing = field.Random((f, f + 1), low=1, seed=rng)
        if np.linalg.det(mixing[:, :f]) == 0:
            continue
        row_beta = beta if beta is not None else field.Random(m, low=1, seed=rng)
        rows = field.Zeros((f + 1, m))
        rows[:f] = mixing[:, f:] * row_beta[np.newaxis, :]
        rows[:f, list(indices)] = rows[:f, list(indices)] + mixing[:, :f]
        rows[f] = row_beta
        if min(int(np.count_nonzero(row)) for row in rows[:f]) < goal:
            continue
        logger.debug("secret plan for %d files after %d draws", f, attempt)
        return SecretPlan(indices, MatFq(mixing), MatFq(row_beta.reshape(1, m)), MatFq(rows))
    raise SamplingCapExceeded(
        f"no plan with secret weight >= {goal} over GF({field.order}) in {cap} draws"
    )


def recover_files(plan, combinations):
    """Undo the plan: the f requested files from the f+1 decoded combinations."""
    if len(combinations) != plan.f + 1:
        raise DimensionMismatchError(f"recovery needs {plan.f + 1} combinations, got {len(combinations)}")
    shape = combinations[0].shape
    field = plan.mixing.field
    stacked = field.Zeros((len(combinations), combinations[0].rows * combinations[0].cols))
    for r, combination in enumerate(combinations):
        stacked[r] = combination.data.reshape(-1)
    # C⁻¹·S, solved in transposed form
    unmixed = solve_fq(plan.combining_matrix().transpose(), MatFq(stacked.T.copy())).data.T
    return [MatFq(unmixed[t].reshape(shape).copy()) for t in range(plan.f)]
