import functools

from django.conf import settings
from rest_framework import permissions
from rest_framework.response import Response
from rest_framework.views import APIView

from cbpir_lab.exceptions import FrameError

from .frames import UNCONFIGURED, decode_frame, encode_frame, error_frame
from .handler import handler_from_files
from .parsers import FRAME_MEDIA_TYPE, FrameParser, FrameRenderer
from .server import max_frame_size


@functools.lru_cache(maxsize=1)
def configured_handler():
    """Handler for CBPIR_PARAMS / CBPIR_DB, built on first use."""
    config = settings.CBPIR
    if not config.get('PARAMS_PATH'):
        return None
    return handler_from_files(config['PARAMS_PATH'], config.get('DATABASE_PATH'))


class FrameView(APIView):
    """
    Frame transport over HTTP.
    The body is one frame and the reply is one frame, exactly as on the socket.
    """
    parser_classes = [FrameParser]
    renderer_classes = [FrameRenderer]
    authentication_classes = []
    permission_classes = [permissions.AllowAny]

    def post(self, request):
        body = request.data if isinstance(request.data, bytes) else b''
        try:
            frame = decode_frame(body, max_frame=max_frame_size())
            handler = configured_handler()
            if handler is None:
                raise FrameError(UNCONFIGURED, "CBPIR_PARAMS is not set")
            reply = handler.handle(frame)
        except FrameError as e:
            reply = error_frame(e.code, e.message)
        return Response(encode_frame(reply), content_type=FRAME_MEDIA_TYPE)
