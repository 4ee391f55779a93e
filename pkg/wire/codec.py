"""Bit-exact files and frame payloads for databases, queries and responses.

Every object starts with a 16-byte header: magic "CBPIR\\0", version,
object kind, b, s, v, f (one byte each), n and k (u16 little-endian).
The matrix that follows carries m and L through its dimensions.
"""
import struct
from enum import IntEnum

from cbpir_lab.exceptions import DimensionMismatchError, FrameError
from matfq.serialization import pack_matfq, pack_matfqs, unpack_matfq, unpack_matfqs
from scheme.database import Database

from .frames import PARAM_MISMATCH, SCHEMA

HEADER = struct.Struct('<6sBBBBBBHH')
MAGIC = b'CBPIR\0'
VERSION = 1
HEADER_FIELDS = ('b', 's', 'v', 'f', 'n', 'k')


class Kind(IntEnum):
    DATABASE = 1
    QUERY = 2
    RESPONSE = 3


def pack_header(params, kind):
    return HEADER.pack(MAGIC, VERSION, kind, params.b, params.s, params.v, params.f, params.n, params.k)


def read_header(data, kind):
    """Header fields as a dict; the magic, version and kind must match."""
    if len(data) < HEADER.size:
        raise FrameError(SCHEMA, f"{len(data)} bytes cannot hold the {HEADER.size}-byte header")
    magic, version, found, *values = HEADER.unpack_from(data)
    if magic != MAGIC:
        raise FrameError(SCHEMA, "bad magic")
    if version != VERSION:
        raise FrameError(SCHEMA, f"unsupported version {version}")
    if found != kind:
        raise FrameError(SCHEMA, f"expected a {Kind(kind).name.lower()} object, got kind {found}")
    return dict(zip(HEADER_FIELDS, values))


def check_header(data, params, kind):
    header = read_header(data, kind)
    mismatched = [key for key in HEADER_FIELDS if header[key] != getattr(params, key)]
    if mismatched:
        raise FrameError(PARAM_MISMATCH, ", ".join(
            f"{key}={header[key]} (expected {getattr(params, key)})" for key in mismatched))
    return data[HEADER.size:]


def _expect_shape(matrix, shape, what):
    if matrix.shape != shape:
        raise FrameError(PARAM_MISMATCH, f"{what} is {matrix.shape[0]}x{matrix.shape[1]}, expected {shape[0]}x{shape[1]}")


def pack_database(db):
    return pack_header(db.params, Kind.DATABASE) + pack_matfq(db.content, db.params.b)


def unpack_database(data, params, field):
    body = check_header(data, params, Kind.DATABASE)
    try:
        content = unpack_matfq(body, field, params.b)
    except DimensionMismatchError as e:
        raise FrameError(SCHEMA, str(e))
    _expect_shape(content, (params.L, params.m * params.delta), "database")
    return Database(params, content)


def pack_query(query, params):
    return pack_header(params, Kind.QUERY) + pack_matfqs(query)


def unpack_query(data, params, tower):
    body = check_header(data, params, Kind.QUERY)
    try:
        query = unpack_matfqs(body, tower)
    except DimensionMismatchError as e:
        raise FrameError(SCHEMA, str(e))
    _expect_shape(query, (params.m * params.delta, params.n), "query")
    return query


def pack_response(response, params):
    return pack_header(params, Kind.RESPONSE) + pack_matfqs(response)


def unpack_response(data, params, tower):
    body = check_header(data, params, Kind.RESPONSE)
    try:
        response = unpack_matfqs(body, tower)
    except DimensionMismatchError as e:
        raise FrameError(SCHEMA, str(e))
    _expect_shape(response, (params.L, params.n), "response")
    return response
