"""Query generation, the server's answer and client-side decoding.

A query for secret row w is Q = D + E + Δ⊗w with
  D  mδ codewords of a fresh random code C,
  E  = φ_Ī(E₀) with E₀ uniform over V^{mδ×(n−k)},
  Δ  = φ_Ī(Δ₀) with Δ₀ over W and invertible flattening T.
The server returns A = X·Q. The client erasure-decodes A, reads the
W-coordinates of the error part on Ī and multiplies by T⁻¹ to obtain
Σ_j w_j X^j.
"""
import logging
from dataclasses import dataclass
from typing import NamedTuple

from cbpir_lab.exceptions import DecodeSupportError, DimensionMismatchError, ScalarCacheMismatchError
from gf.basis import BasisGamma, sample_basis
from lincode.codes import LinearCode, encode_rows, erasure_decode_rows, place_on_complement, sample_code
from matfq.algebra import ScalarMultipleCache, kron, select_columns
from matfq.elimination import invert_fq, rank_fq
from matfq.matrices import MatFq, MatFqs

logger = logging.getLogger(__name__)


class QueryComponents(NamedTuple):
    codewords: MatFqs
    noise: MatFqs
    payload: MatFqs


@dataclass(frozen=True, eq=False)
class QuerySecret:
    """Client-only state of one query. Never leaves the client."""
    code: LinearCode
    basis: BasisGamma
    delta0: MatFqs
    transform: MatFq
    transform_inverse: MatFq
    secret_row: MatFq
    components: QueryComponents
    unique_scalar_multiples: int

    @property
    def delta(self):
        return self.transform.rows


def unit_row(field, m, index):
    row = field.Zeros((1, m))
    row[0, index] = 1
    return MatFq(row)


def _sample_delta0(params, basis, rng):
    """Δ₀ with W entries whose δ×δ W-coordinate matrix T is invertible."""
    delta, width = params.delta, params.n - params.k
    draws = 0
    while True:
        draws += 1
        entries = basis.random_in_w((delta, width), rng)
        transform = MatFq(basis.w_coordinates(entries).reshape(delta, delta))
        if rank_fq(transform) == delta:
            logger.debug("Δ₀ sampled after %d draws", draws)
            return MatFqs(basis.tower, entries), transform


def gen_query(params, tower, secret_row, rng):
    if not isinstance(secret_row, MatFq):
        secret_row = MatFq.row(tower.field, secret_row)
    if secret_row.shape != (1, params.m):
        raise DimensionMismatchError(f"secret row must be 1x{params.m}, got {secret_row.shape}")
    rows = params.m * params.delta
    code = sample_code(tower, params.n, params.k, rng)
    basis = sample_basis(tower, params.v, rng)

    codewords = encode_rows(code, MatFqs.random(tower, rows, params.k, rng))
    noise = place_on_complement(code, MatFqs(tower, basis.random_in_v((rows, params.n - params.k), rng)))
    delta0, transform = _sample_delta0(params, basis, rng)
    delta = place_on_complement(code, delta0)

    cache = ScalarMultipleCache(delta)
    payload = kron(delta, secret_row, cache)
    # one multiple per distinct nonzero scalar, so never more than q-1
    distinct = len({int(x) for x in secret_row.data.flatten()} - {0})
    if cache.unique != distinct:
        raise ScalarCacheMismatchError(f"{cache.unique} cached multiples for {distinct} distinct scalars")

    secret = QuerySecret(
        code=code,
        basis=basis,
        delta0=delta0,
        transform=transform,
        transform_inverse=invert_fq(transform),
        secret_row=secret_row,
        components=QueryComponents(codewords, noise, payload),
        unique_scalar_multiples=cache.unique,
    )
    return secret, codewords + noise + payload


def gen_query_original(params, tower, index, rng):
    """The single-file query with secret row e^index."""
    if not 0 <= index < params.m:
        raise IndexError(f"file index {index} outside [0, {params.m})")
    return gen_query(params, tower, unit_row(tower.field, params.m, index), rng)


def server_respond(db, query):
    """A = X·Q; the server holds no other state."""
    if query.rows != db.content.cols:
        raise DimensionMismatchError(f"query has {query.rows} rows, database has {db.content.cols} columns")
    return db.content @ query


def decode_response(secret, response):
    """The L×δ combination Σ_j w_j X^j carried by `response`."""
    code = secret.code
    _, errors = erasure_decode_rows(code, response)
    stray = set(errors.column_support()) - set(code.complement)
    if stray:
        raise DecodeSupportError(f"error part reaches information positions {sorted(stray)}")
    on_complement = select_columns(errors, code.complement)
    flat = secret.basis.w_coordinates(on_complement.data).reshape(response.rows, secret.delta)
    return MatFq(flat) @ secret.transform_inverse
