"""Random linear codes over F_{q^s} with a designated information set.

A code keeps its generator G (k×n), the ascending information set I and the
inverse of G restricted to I, so erasure decoding against the complement Ī
is a single k×k product per row.
"""
import logging
import struct
from dataclasses import dataclass

from cbpir_lab.exceptions import DimensionMismatchError
from matfq.algebra import right_multiplication_matrix, select_columns
from matfq.elimination import invert_fqs, kernel_fq, rank_fqs
from matfq.matrices import MatFqs
from matfq.serialization import pack_matfqs, read_matfqs

logger = logging.getLogger(__name__)

CODE_HEADER = struct.Struct('<BBHH')


@dataclass(frozen=True, eq=False)
class LinearCode:
    generator: MatFqs
    info_set: tuple
    info_inverse: MatFqs

    @classmethod
    def from_generator(cls, generator, info_set):
        info_set = tuple(sorted(int(i) for i in info_set))
        if len(info_set) != generator.rows or len(set(info_set)) != len(info_set):
            raise DimensionMismatchError(f"information set {info_set} does not match k={generator.rows}")
        return cls(generator, info_set, invert_fqs(select_columns(generator, info_set)))

    @property
    def tower(self):
        return self.generator.tower

    @property
    def n(self):
        return self.generator.cols

    @property
    def k(self):
        return self.generator.rows

    @property
    def complement(self):
        chosen = set(self.info_set)
        return tuple(i for i in range(self.n) if i not in chosen)


def sample_code(tower, n, k, rng):
    """I uniform among k-subsets, G_I uniform invertible, the other columns uniform."""
    if not 0 < k < n:
        raise ValueError(f"code dimension must satisfy 0 < k < n, got k={k}, n={n}")
    info_set = tuple(sorted(int(i) for i in rng.choice(n, size=k, replace=False)))
    draws = 0
    while True:
        draws += 1
        info_block = MatFqs.random(tower, k, k, rng)
        if rank_fqs(info_block) == k:
            break
    data = tower.zeros((k, n))
    data[:, list(info_set)] = info_block.data
    rest = [i for i in range(n) if i not in info_set]
    data[:, rest] = tower.random((k, n - k), rng)
    logger.debug("[%d,%d] code sampled after %d information-block draws", n, k, draws)
    return LinearCode(MatFqs(tower, data), info_set, invert_fqs(info_block))


def encode_rows(code, messages):
    if messages.cols != code.k:
        raise DimensionMismatchError(f"messages need {code.k} columns, got {messages.cols}")
    return messages @ code.generator


def erasure_decode_rows(code, received):
    """Split each row into its codeword and its error part on Ī."""
    if received.cols != code.n:
        raise DimensionMismatchError(f"received words need {code.n} columns, got {received.cols}")
    messages = select_columns(received, code.info_set) @ code.info_inverse
    codewords = messages @ code.generator
    return codewords, received - codewords


def place_on_complement(code, values):
    """φ_Ī: spread the n−k columns of `values` onto the complement positions, zeros on I."""
    if values.cols != code.n - code.k:
        raise DimensionMismatchError(f"complement part needs {code.n - code.k} columns, got {values.cols}")
    data = code.tower.zeros((values.rows, code.n))
    data[:, list(code.complement)] = values.data
    return MatFqs(code.tower, data)


def parity_checks(code):
    """F_q matrix H with v ∈ C exactly when flatten(v)·H = 0."""
    return kernel_fq(right_multiplication_matrix(code.generator)).transpose()


def pack_code(code):
    tower = code.tower
    header = CODE_HEADER.pack(tower.b, tower.s, code.n, code.k)
    indices = struct.pack(f'<{code.k}H', *code.info_set)
    return header + indices + pack_matfqs(code.generator)


def unpack_code(data, tower):
    b, s, n, k = CODE_HEADER.unpack_from(data, 0)
    if (b, s) != (tower.b, tower.s):
        raise DimensionMismatchError(f"code over q=2^{b}, s={s} does not match {tower!r}")
    offset = CODE_HEADER.size
    info_set = struct.unpack_from(f'<{k}H', data, offset)
    generator, end = read_matfqs(data, tower, offset + 2 * k)
    if end != len(data) or generator.shape != (k, n):
        raise DimensionMismatchError("code payload does not match its header")
    return LinearCode.from_generator(generator, info_set)
