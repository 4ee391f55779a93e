"""Blocking frame client; a retrieval transport for scheme.batch."""
import json
import logging
import socket

from cbpir_lab.exceptions import FrameError

from .codec import pack_database, pack_query, unpack_response
from .frames import (
    FRAME_OVERHEAD, PARAM_MISMATCH, TRUNCATED, UNEXPECTED_TYPE, Frame, MessageType, encode_frame, parse_error,
    read_frame,
)
from .server import max_frame_size, parse_endpoint

logger = logging.getLogger(__name__)

# seeds and weight targets stay client-side
SHARED_KEYS = ('b', 's', 'v', 'f', 'n', 'k', 'm', 'L')


class PIRClient:
    def __init__(self, endpoint, params_file, timeout=30.0, max_frame=None):
        self.params_file = params_file
        self.params = params_file.params
        self.tower = params_file.tower()
        self.max_frame = max_frame or max_frame_size()
        self._socket = socket.create_connection(parse_endpoint(endpoint), timeout=timeout)
        self._reader = self._socket.makefile('rb')
        # (sent, received) frame bytes of the last exchange
        self.last_exchange = None

    def __enter__(self):
        return self

    def __exit__(self, *exc):
        self.close()

    def close(self):
        self._reader.close()
        self._socket.close()

    def exchange(self, frame, expected):
        logger.debug("sending %s, %d payload bytes", frame.msg_type.name, len(frame.payload))
        data = encode_frame(frame)
        self._socket.sendall(data)
        reply = read_frame(self._reader, self.max_frame)
        if reply is None:
            raise FrameError(TRUNCATED, "server closed the connection")
        self.last_exchange = (len(data), FRAME_OVERHEAD + len(reply.payload))
        if reply.msg_type == MessageType.ERROR:
            raise FrameError(*parse_error(reply.payload))
        if reply.msg_type != expected:
            raise FrameError(UNEXPECTED_TYPE, f"expected {expected.name}, got {reply.msg_type.name}")
        return reply.payload

    def server_params(self):
        return json.loads(self.exchange(Frame(MessageType.PARAMS), MessageType.PARAMS))

    def check_params(self):
        """Fail early when the server's parameters or field moduli differ from ours."""
        served = self.server_params()
        ours = self.params_file.as_dict()
        mismatched = [key for key in SHARED_KEYS if served.get(key) != ours[key]]
        if served.get('moduli') != self.tower.describe():
            mismatched.append('moduli')
        if mismatched:
            raise FrameError(PARAM_MISMATCH, "server differs in " + ", ".join(mismatched))
        return served

    def upload(self, db):
        return json.loads(self.exchange(Frame(MessageType.UPLOAD_DB, pack_database(db)), MessageType.PARAMS))

    def respond(self, query):
        payload = self.exchange(Frame(MessageType.QUERY, pack_query(query, self.params)), MessageType.RESPONSE)
        return unpack_response(payload, self.params, self.tower)
