"""Threaded TCP server speaking the frame protocol."""
import logging
import socketserver

from django.conf import settings

from cbpir_lab.exceptions import FrameError

from .frames import TOO_LARGE, TRUNCATED, encode_frame, error_frame, read_frame

logger = logging.getLogger(__name__)


def max_frame_size():
    return settings.CBPIR.get('MAX_FRAME', 1 << 30)


def parse_endpoint(endpoint):
    """'host:port' -> (host, port)."""
    host, sep, port = endpoint.rpartition(':')
    if not sep or not host or not port.isdigit():
        raise ValueError(f"endpoint must look like host:port, got {endpoint!r}")
    return host, int(port)


class FrameRequestHandler(socketserver.StreamRequestHandler):
    """One request-response exchange at a time until the peer hangs up."""

    def handle(self):
        while True:
            try:
                frame = read_frame(self.rfile, self.server.max_frame)
            except FrameError as e:
                logger.warning("bad frame from %s: %s", self.client_address[0], e.code)
                sent = self._send(error_frame(e.code, e.message))
                # after these the stream position is lost
                if not sent or e.code in (TRUNCATED, TOO_LARGE):
                    return
                continue
            except OSError as e:
                logger.warning("connection from %s dropped: %s", self.client_address[0], e)
                return
            if frame is None or not self._send(self.server.frame_handler.handle(frame)):
                return

    def _send(self, frame):
        try:
            self.wfile.write(encode_frame(frame))
        except OSError as e:
            logger.warning("connection from %s dropped: %s", self.client_address[0], e)
            return False
        return True


class PIRServer(socketserver.ThreadingTCPServer):
    daemon_threads = True
    allow_reuse_address = True

    def __init__(self, address, frame_handler, max_frame=None):
        self.frame_handler = frame_handler
        self.max_frame = max_frame or max_frame_size()
        super().__init__(address, FrameRequestHandler)

    @property
    def endpoint(self):
        host, port = self.server_address[:2]
        return f"{host}:{port}"


def serve(frame_handler, endpoint, max_frame=None):
    """Blocks answering frames at `endpoint` until interrupted."""
    with PIRServer(parse_endpoint(endpoint), frame_handler, max_frame) as server:
        logger.info("serving %d files on %s", frame_handler.params.m, server.endpoint)
        try:
            server.serve_forever()
        except KeyboardInterrupt:
            logger.info("server on %s stopped", server.endpoint)
