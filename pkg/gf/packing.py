"""Little-endian bit packing of field elements.

An F_q element is b bits, least significant coefficient first. A run of
F_q elements is one continuous bit stream padded with zeros to a whole
byte. An F_{q^s} element is its s coordinate blocks (s·b bits) padded to a
whole byte on its own, so extension elements always start on a byte.
"""
import math

import galois
import numpy as np

from cbpir_lab.exceptions import DimensionMismatchError


def fq_stream_bytes(count, b):
    return math.ceil(count * b / 8)


def fqs_element_bytes(tower):
    return math.ceil(tower.s * tower.b / 8)


def _to_bits(values, b):
    ints = np.asarray(values.view(np.ndarray) if isinstance(values, galois.FieldArray) else values,
                      dtype=np.uint64)
    shifts = np.arange(b, dtype=np.uint64)
    return ((ints[..., np.newaxis] >> shifts) & np.uint64(1)).astype(np.uint8)


def _from_bits(bits, b):
    weights = np.left_shift(np.int64(1), np.arange(b, dtype=np.int64))
    return (bits.astype(np.int64) * weights).sum(axis=-1)


def pack_fq(values, b):
    bits = _to_bits(values.reshape(-1), b).reshape(-1)
    return np.packbits(bits, bitorder='little').tobytes()


def unpack_fq(data, count, field, b):
    expected = fq_stream_bytes(count, b)
    if len(data) != expected:
        raise DimensionMismatchError(f"expected {expected} bytes for {count} F_q elements, got {len(data)}")
    bits = np.unpackbits(np.frombuffer(data, dtype=np.uint8), bitorder='little')
    if bits[count * b:].any():
        raise DimensionMismatchError("nonzero padding bits")
    return field(_from_bits(bits[:count * b].reshape(count, b), b))


def pack_fqs(elements, tower):
    flat = elements.reshape(-1, tower.s)
    width = fqs_element_bytes(tower) * 8
    bits = np.zeros((flat.shape[0], width), dtype=np.uint8)
    bits[:, :tower.s * tower.b] = _to_bits(flat, tower.b).reshape(flat.shape[0], -1)
    return np.packbits(bits, axis=1, bitorder='little').tobytes()


def unpack_fqs(data, count, tower):
    size = fqs_element_bytes(tower)
    if len(data) != count * size:
        raise DimensionMismatchError(f"expected {count * size} bytes for {count} F_q^s elements, got {len(data)}")
    raw = np.frombuffer(data, dtype=np.uint8).reshape(count, size)
    bits = np.unpackbits(raw, axis=1, bitorder='little')
    used = tower.s * tower.b
    if bits[:, used:].any():
        raise DimensionMismatchError("nonzero padding bits")
    coords = _from_bits(bits[:, :used].reshape(count, tower.s, tower.b), tower.b)
    return tower.field(coords)
