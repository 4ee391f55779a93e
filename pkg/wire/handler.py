"""Frame dispatch shared by the socket server and the HTTP view."""
import json
import logging
import threading
from pathlib import Path

from cbpir_lab.exceptions import FrameError
from scheme.query import server_respond
from scheme.serializers import load_params_file

from .codec import pack_response, unpack_database, unpack_query
from .frames import NO_DATABASE, READ_ONLY, UNEXPECTED_TYPE, Frame, MessageType, error_frame

logger = logging.getLogger(__name__)


class FrameHandler:
    """Answers frames against one read-only database.

    A handler started without a database accepts exactly one UPLOAD_DB.
    """

    def __init__(self, params_file, db=None):
        self.params_file = params_file
        self.params = params_file.params
        self.tower = params_file.tower()
        self._db = db
        self._lock = threading.Lock()

    @property
    def db(self):
        return self._db

    def describe(self):
        document = self.params_file.as_dict()
        document['moduli'] = self.tower.describe()
        document['database_loaded'] = self._db is not None
        return document

    def handle(self, frame):
        logger.debug("frame %s, %d payload bytes", frame.msg_type.name, len(frame.payload))
        try:
            return self._dispatch(frame)
        except FrameError as e:
            logger.warning("refused %s frame: %s", frame.msg_type.name, e.code)
            return error_frame(e.code, e.message)

    def _dispatch(self, frame):
        if frame.msg_type == MessageType.QUERY:
            return self._answer(frame.payload)
        if frame.msg_type == MessageType.PARAMS:
            return Frame(MessageType.PARAMS, json.dumps(self.describe(), sort_keys=True).encode('utf-8'))
        if frame.msg_type == MessageType.UPLOAD_DB:
            return self._load(frame.payload)
        raise FrameError(UNEXPECTED_TYPE, f"servers do not accept {frame.msg_type.name} frames")

    def _answer(self, payload):
        db = self._db
        if db is None:
            raise FrameError(NO_DATABASE, "upload a database first")
        query = unpack_query(payload, self.params, self.tower)
        return Frame(MessageType.RESPONSE, pack_response(server_respond(db, query), self.params))

    def _load(self, payload):
        with self._lock:
            if self._db is not None:
                raise FrameError(READ_ONLY, "a database is already loaded")
            self._db = unpack_database(payload, self.params, self.tower.field)
        logger.info("database loaded: %d files", self.params.m)
        return Frame(MessageType.PARAMS, json.dumps(self.describe(), sort_keys=True).encode('utf-8'))


def handler_from_files(params_path, db_path=None):
    params_file = load_params_file(params_path)
    if not db_path:
        return FrameHandler(params_file)
    db = unpack_database(Path(db_path).read_bytes(), params_file.params, params_file.tower().field)
    return FrameHandler(params_file, db)
