import hashlib
from pathlib import Path

from django.core.management.base import BaseCommand, CommandError

from cli.common import add_params_argument, add_seed_argument, domain_failures, load_params, resolve_seed
from scheme.database import Database
from scheme.randomness import stream
from wire.codec import pack_database


class Command(BaseCommand):
    help = "Write a uniformly random database for a ParamsFile"

    def add_arguments(self, parser):
        add_params_argument(parser)
        add_seed_argument(parser)
        parser.add_argument('--out', required=True, help="database file to write")

    def handle(self, *args, **options):
        params_file = load_params(options['params'])
        seed = resolve_seed(options, params_file)
        with domain_failures():
            tower = params_file.tower()
            db = Database.random(params_file.params, tower.field, stream(seed, 'database'))
        data = pack_database(db)
        try:
            Path(options['out']).write_bytes(data)
        except OSError as e:
            raise CommandError(f"cannot write {options['out']}: {e.strerror}", returncode=1)
        self.stdout.write(f"{len(data)} bytes, sha256 {hashlib.sha256(data).hexdigest()}")
        self.stdout.write(self.style.SUCCESS(f"database of {params_file.params.m} files written to {options['out']}"))
