"""Binary matrix format: rows (u64 LE), cols (u64 LE), packed row-major entries."""
import struct

from cbpir_lab.exceptions import DimensionMismatchError
from gf.packing import fq_stream_bytes, fqs_element_bytes, pack_fq, pack_fqs, unpack_fq, unpack_fqs

from .matrices import MatFq, MatFqs

DIMENSIONS = struct.Struct('<QQ')


def pack_matfq(a, b):
    return DIMENSIONS.pack(a.rows, a.cols) + pack_fq(a.data, b)


def pack_matfqs(a):
    return DIMENSIONS.pack(a.rows, a.cols) + pack_fqs(a.data, a.tower)


def _dimensions(buffer, offset):
    if len(buffer) - offset < DIMENSIONS.size:
        raise DimensionMismatchError("matrix header is truncated")
    return DIMENSIONS.unpack_from(buffer, offset)


def read_matfq(buffer, field, b, offset=0):
    """Parse one F_q matrix at `offset`; returns (matrix, next offset)."""
    rows, cols = _dimensions(buffer, offset)
    start = offset + DIMENSIONS.size
    end = start + fq_stream_bytes(rows * cols, b)
    if end > len(buffer):
        raise DimensionMismatchError(f"{rows}x{cols} matrix body is truncated")
    values = unpack_fq(bytes(buffer[start:end]), rows * cols, field, b)
    return MatFq(values.reshape(rows, cols)), end


def read_matfqs(buffer, tower, offset=0):
    rows, cols = _dimensions(buffer, offset)
    start = offset + DIMENSIONS.size
    end = start + rows * cols * fqs_element_bytes(tower)
    if end > len(buffer):
        raise DimensionMismatchError(f"{rows}x{cols} matrix body is truncated")
    coords = unpack_fqs(bytes(buffer[start:end]), rows * cols, tower)
    return MatFqs(tower, coords.reshape(rows, cols, tower.s)), end


def unpack_matfq(data, field, b):
    matrix, end = read_matfq(data, field, b)
    if end != len(data):
        raise DimensionMismatchError(f"{len(data) - end} trailing bytes after matrix")
    return matrix


def unpack_matfqs(data, tower):
    matrix, end = read_matfqs(data, tower)
    if end != len(data):
        raise DimensionMismatchError(f"{len(data) - end} trailing bytes after matrix")
    return matrix
