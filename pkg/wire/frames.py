"""Length-prefixed frames.

    length   4 bytes, big-endian, = payload size + 1
    msg_type 1 byte
    payload  length - 1 bytes
"""
import struct
from enum import IntEnum
from typing import NamedTuple

from cbpir_lab.exceptions import FrameError

LENGTH = struct.Struct('>I')
# length prefix plus type byte
FRAME_OVERHEAD = LENGTH.size + 1

# error codes carried by ERROR frames
TRUNCATED = 'truncated'
UNKNOWN_TYPE = 'unknown-type'
SCHEMA = 'schema'
TOO_LARGE = 'too-large'
PARAM_MISMATCH = 'param-mismatch'
READ_ONLY = 'read-only'
NO_DATABASE = 'no-database'
UNEXPECTED_TYPE = 'unexpected-type'
UNCONFIGURED = 'unconfigured'


class MessageType(IntEnum):
    UPLOAD_DB = 0x01
    QUERY = 0x02
    RESPONSE = 0x03
    ERROR = 0x04
    PARAMS = 0x05


class Frame(NamedTuple):
    msg_type: MessageType
    payload: bytes = b''


def encode_frame(frame):
    return LENGTH.pack(len(frame.payload) + 1) + bytes([frame.msg_type]) + frame.payload


def _check_length(length, max_frame):
    if length == 0:
        raise FrameError(SCHEMA, "length must cover the type byte")
    if max_frame is not None and length > max_frame:
        raise FrameError(TOO_LARGE, f"{length} bytes exceeds the {max_frame}-byte cap")


def _frame(body):
    try:
        msg_type = MessageType(body[0])
    except ValueError:
        raise FrameError(UNKNOWN_TYPE, f"message type 0x{body[0]:02x}")
    return Frame(msg_type, bytes(body[1:]))


def decode_frame(data, max_frame=None):
    """Parse exactly one complete frame."""
    if len(data) < LENGTH.size:
        raise FrameError(TRUNCATED, f"{len(data)} bytes cannot hold a length prefix")
    (length,) = LENGTH.unpack_from(data)
    _check_length(length, max_frame)
    body = data[LENGTH.size:]
    if len(body) < length:
        raise FrameError(TRUNCATED, f"expected {length} bytes after the prefix, got {len(body)}")
    if len(body) > length:
        raise FrameError(SCHEMA, f"{len(body) - length} bytes after the frame")
    return _frame(body)


def read_frame(stream, max_frame=None):
    """Next frame from a binary file object, or None on a clean end of stream."""
    prefix = stream.read(LENGTH.size)
    if not prefix:
        return None
    if len(prefix) < LENGTH.size:
        raise FrameError(TRUNCATED, "connection closed inside the length prefix")
    (length,) = LENGTH.unpack(prefix)
    _check_length(length, max_frame)
    body = stream.read(length)
    if len(body) < length:
        raise FrameError(TRUNCATED, f"connection closed after {len(body)} of {length} bytes")
    return _frame(body)


def error_frame(code, message=''):
    payload = code.encode('ascii')
    if message:
        payload += b'\n' + message.encode('utf-8')
    return Frame(MessageType.ERROR, payload)


def parse_error(payload):
    """(code, message) of an ERROR payload."""
    code, _, message = payload.partition(b'\n')
    return code.decode('ascii'), message.decode('utf-8')
