from rest_framework.parsers import BaseParser
from rest_framework.renderers import BaseRenderer

FRAME_MEDIA_TYPE = 'application/octet-stream'


class FrameParser(BaseParser):
    """Hands the raw request body through untouched."""
    media_type = FRAME_MEDIA_TYPE

    def parse(self, stream, media_type=None, parser_context=None):
        return stream.read()


class FrameRenderer(BaseRenderer):
    media_type = FRAME_MEDIA_TYPE
    format = 'frame'
    charset = None
    render_style = 'binary'

    def render(self, data, accepted_media_type=None, renderer_context=None):
        if isinstance(data, (bytes, bytearray)):
            return bytes(data)
        # framework errors (e.g. 415) arrive as dicts
        return repr(data).encode('utf-8')
