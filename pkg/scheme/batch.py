"""Batch retrieval: f files from f+1 queries through any transport.

A transport is anything with `respond(query) -> response`; the in-process
`LocalTransport` and the socket `wire.client.PIRClient` both qualify.
"""
import logging
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from cbpir_lab.exceptions import DimensionMismatchError
from matfq.matrices import MatFq

from .plan import build_secret_plan, recover_files
from .query import decode_response, gen_query, server_respond

logger = logging.getLogger(__name__)


class LocalTransport:
    """Answers queries in-process against a loaded database."""

    def __init__(self, db):
        self.db = db

    def respond(self, query):
        return server_respond(self.db, query)


@dataclass(frozen=True, eq=False)
class StoredBeta:
    """A decoded β response kept for later batches."""
    beta: MatFq
    combination: MatFq


@dataclass
class Transcript:
    """Sizes of one batch's exchanges.

    The *_bits fields count F_q coordinates of the matrices exchanged, s·b
    bits per F_{q^s} entry; the rate is taken over them. Transports that
    report `last_exchange` also add the frame bytes actually moved.
    """
    queries: int = 0
    upload_bits: int = 0
    download_bits: int = 0
    payload_bits: int = 0
    wire_upload_bytes: int = None
    wire_download_bytes: int = None
    seed: int = None
    sizes: list = field(default_factory=list)

    def record(self, query, response, b, wire=None):
        s = query.tower.s
        up = query.rows * query.cols * s * b
        down = response.rows * response.cols * s * b
        self.queries += 1
        self.upload_bits += up
        self.download_bits += down
        exchange = {'query_bits': up, 'response_bits': down}
        if wire is not None:
            sent, received = wire
            self.wire_upload_bytes = (self.wire_upload_bytes or 0) + sent
            self.wire_download_bytes = (self.wire_download_bytes or 0) + received
            exchange.update(query_frame_bytes=sent, response_frame_bytes=received)
        self.sizes.append(exchange)

    @property
    def rate(self):
        return Fraction(self.payload_bits, self.upload_bits + self.download_bits)

    def as_dict(self):
        return {
            'queries': self.queries,
            'upload_bits': self.upload_bits,
            'download_bits': self.download_bits,
            'payload_bits': self.payload_bits,
            'wire_upload_bytes': self.wire_upload_bytes,
            'wire_download_bytes': self.wire_download_bytes,
            'rate': str(self.rate),
            'seed': self.seed,
            'exchanges': self.sizes,
        }


@dataclass(frozen=True, eq=False)
class BatchResult:
    plan: object
    files: list
    combinations: list
    secrets: list
    transcript: Transcript

    def stored_beta(self):
        return StoredBeta(self.plan.beta, self.combinations[-1])


def retrieve_batch(params, tower, transport, indices, rng, reuse=None, seed=None):
    """Privately fetch the files at `indices` (0-based).

    With `reuse`, the plan keeps the stored β and only the f combination
    queries go over the transport.
    """
    plan = build_secret_plan(params, tower.field, indices, rng,
                             beta=reuse.beta if reuse is not None else None)
    rows = plan.secret_rows()
    if reuse is not None:
        rows = rows[:-1]
    transcript = Transcript(seed=seed)
    combinations, secrets = [], []
    for row in rows:
        secret, query = gen_query(params, tower, row, rng)
        response = transport.respond(query)
        if response.shape != (params.L, params.n):
            raise DimensionMismatchError(f"response must be {params.L}x{params.n}, got {response.shape}")
        transcript.record(query, response, params.b, getattr(transport, 'last_exchange', None))
        combinations.append(decode_response(secret, response))
        secrets.append(secret)
    if reuse is not None:
        combinations.append(reuse.combination)
    files = recover_files(plan, combinations)
    transcript.payload_bits = len(files) * params.L * params.delta * params.b
    logger.info("batch of %d files over %d queries, rate %s", len(files), transcript.queries, transcript.rate)
    return BatchResult(plan, files, combinations, secrets, transcript)


def spread_weight_row(field, m, weight, rng):
    """Secret row of the given weight using min(weight, q-1) distinct nonzero scalars."""
    if not 0 <= weight <= m:
        raise ValueError(f"weight must lie in [0, {m}], got {weight}")
    row = field.Zeros((1, m))
    if weight == 0:
        return MatFq(row)
    support = np.sort(rng.choice(m, size=weight, replace=False))
    distinct = min(weight, field.order - 1)
    scalars = rng.choice(np.arange(1, field.order), size=distinct, replace=False)
    values = np.concatenate([scalars, rng.choice(scalars, size=weight - distinct)])
    rng.shuffle(values)
    row[0, support] = field(values.astype(int))
    return MatFq(row)
