"""Splitting F_{q^s}^n into C ⊕ φ_Ī(V^{n−k}) ⊕ φ_Ī(W^{n−k}) over F_q."""
from typing import NamedTuple

import numpy as np

from matfq.algebra import flatten_fq, right_multiplication_matrix
from matfq.elimination import solve_fq
from matfq.matrices import MatFq, MatFqs


class Decomposition(NamedTuple):
    codeword: MatFqs
    v_part: MatFqs
    w_part: MatFqs


def spanning_matrix(code, basis):
    """ns×ns F_q matrix whose rows span C, then φ_Ī(V), then φ_Ī(W), in power coordinates.

    The split is direct exactly when this matrix is invertible.
    """
    tower = code.tower
    s = tower.s
    field = tower.field
    rows = [right_multiplication_matrix(code.generator).data]
    for first, last in ((0, basis.v), (basis.v, s)):
        block = field.Zeros(((code.n - code.k) * (last - first), code.n * s))
        row = 0
        for position in code.complement:
            for t in range(first, last):
                block[row, position * s:(position + 1) * s] = basis.element(t)
                row += 1
        rows.append(block)
    return MatFq(np.concatenate(rows, axis=0))


def direct_sum_decompose(code, basis, vectors):
    """Unique (C, φ_Ī(V), φ_Ī(W)) parts of each row of `vectors`.

    Raises SingularMatrixError when the three spaces do not form a direct sum.
    """
    tower = code.tower
    span = spanning_matrix(code, basis)
    coefficients = solve_fq(span, flatten_fq(vectors)).data
    ks = code.k * tower.s
    kv = ks + (code.n - code.k) * basis.v
    parts = []
    for start, stop in ((0, ks), (ks, kv), (kv, span.rows)):
        flat = coefficients[:, start:stop] @ span.data[start:stop]
        parts.append(MatFqs(tower, flat.reshape(vectors.rows, code.n, tower.s)))
    return Decomposition(*parts)
