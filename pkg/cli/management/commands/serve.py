from pathlib import Path

from django.conf import settings
from django.core.management.base import BaseCommand, CommandError

from cli.common import add_params_argument, domain_failures, load_params
from wire.codec import unpack_database
from wire.handler import FrameHandler
from wire.server import serve


class Command(BaseCommand):
    help = "Serve a database over the frame protocol"

    def add_arguments(self, parser):
        add_params_argument(parser)
        parser.add_argument('--db', default=settings.CBPIR.get('DATABASE_PATH'),
                            help="database file; omit to accept one UPLOAD_DB")
        parser.add_argument('--endpoint', default=settings.CBPIR['ADDR'], help="host:port to listen on")
        parser.add_argument('--max-frame', type=int, default=None, help="largest accepted frame in bytes")

    def handle(self, *args, **options):
        params_file = load_params(options['params'])
        db = None
        with domain_failures():
            if options['db']:
                try:
                    data = Path(options['db']).read_bytes()
                except OSError as e:
                    raise CommandError(f"cannot read {options['db']}: {e.strerror}", returncode=1)
                db = unpack_database(data, params_file.params, params_file.tower().field)
            handler = FrameHandler(params_file, db)
        self.stdout.write(f"listening on {options['endpoint']}")
        try:
            serve(handler, options['endpoint'], max_frame=options['max_frame'])
        except ValueError as e:
            raise CommandError(str(e), returncode=2)
        except OSError as e:
            raise CommandError(f"cannot listen on {options['endpoint']}: {e.strerror}", returncode=1)
