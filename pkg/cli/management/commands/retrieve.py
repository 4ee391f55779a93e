from pathlib import Path

from django.core.management.base import BaseCommand, CommandError

from analysis.rates import rate_exact, rate_reusing_beta
from cbpir_lab.exceptions import RecoveryMismatchError
from cli.common import (
    add_params_argument, add_seed_argument, domain_failures, load_params, params_hash, resolve_seed, write_json,
)
from matfq.serialization import pack_matfq
from scheme.batch import LocalTransport, retrieve_batch
from scheme.randomness import stream
from wire.client import PIRClient
from wire.codec import unpack_database


def parse_indices(text, params):
    try:
        indices = [int(part) for part in text.split(',') if part.strip()]
    except ValueError:
        raise CommandError(f"indices must be comma-separated integers, got {text!r}", returncode=2)
    if len(indices) != params.f or len(set(indices)) != params.f:
        raise CommandError(f"need {params.f} distinct indices, got {text!r}", returncode=2)
    if not all(0 <= j < params.m for j in indices):
        raise CommandError(f"indices must lie in [0, {params.m})", returncode=2)
    return indices


class Command(BaseCommand):
    help = "Privately retrieve f files in-process or from a frame server"

    def add_arguments(self, parser):
        add_params_argument(parser)
        add_seed_argument(parser)
        parser.add_argument('--db', help="database file; required in-process, used for verification otherwise")
        parser.add_argument('--endpoint', help="host:port of a running server")
        parser.add_argument('--indices', help="0-based file indices, e.g. 0,5 (default: random)")
        parser.add_argument('--batches', type=int, default=1, help="number of batches to run")
        parser.add_argument('--reuse-beta', action='store_true',
                            help="keep the first β response and send f queries per later batch")
        parser.add_argument('--out', help="directory for the transcript and recovered files (default: stdout)")

    def handle(self, *args, **options):
        params_file = load_params(options['params'])
        params = params_file.params
        if not options['db'] and not options['endpoint']:
            raise CommandError("pass --db, --endpoint or both", returncode=2)
        if options['batches'] < 1:
            raise CommandError("--batches must be positive", returncode=2)
        fixed = parse_indices(options['indices'], params) if options['indices'] else None
        seed = resolve_seed(options, params_file)
        rng = stream(seed, 'queries')

        with domain_failures():
            tower = params_file.tower()
            db = self.read_database(options['db'], params_file, tower) if options['db'] else None
            client = None
            if options['endpoint']:
                client = self.connect(options['endpoint'], params_file)
            transport = client or LocalTransport(db)
            try:
                if client is not None:
                    client.check_params()
                batches, results = [], []
                stored = None
                for _ in range(options['batches']):
                    indices = fixed if fixed is not None else sorted(
                        int(j) for j in rng.choice(params.m, size=params.f, replace=False))
                    result = retrieve_batch(params, tower, transport, indices, rng, reuse=stored, seed=seed)
                    verified = self.verify(db, indices, result)
                    if options['reuse_beta'] and stored is None:
                        stored = result.stored_beta()
                    batches.append({'indices': indices, 'verified': verified, **result.transcript.as_dict()})
                    results.append((indices, result))
            except OSError as e:
                raise CommandError(f"connection to {options['endpoint']} failed: {e}", returncode=1)
            finally:
                if client is not None:
                    client.close()

        transcript = {
            'seed': seed,
            'params': params_file.as_dict(),
            'params_hash': params_hash(params_file),
            'transport': options['endpoint'] or 'in-process',
            'rate_formula': str(rate_exact(params).exact_rate),
            'rate_formula_reusing_beta': str(rate_reusing_beta(params).exact_rate),
            'batches': batches,
        }
        if options['out']:
            out = Path(options['out'])
            out.mkdir(parents=True, exist_ok=True)
            write_json(transcript, out / 'transcript.json')
            for number, (indices, result) in enumerate(results):
                for j, recovered in zip(indices, result.files):
                    (out / f"batch{number}_file{j}.bin").write_bytes(pack_matfq(recovered, params.b))
            self.stdout.write(self.style.SUCCESS(f"{len(results)} batches written to {out}"))
        else:
            write_json(transcript, stream=self.stdout)

    def connect(self, endpoint, params_file):
        try:
            return PIRClient(endpoint, params_file)
        except ValueError as e:
            raise CommandError(str(e), returncode=2)
        except OSError as e:
            raise CommandError(f"cannot reach {endpoint}: {e}", returncode=1)

    def read_database(self, path, params_file, tower):
        try:
            data = Path(path).read_bytes()
        except OSError as e:
            raise CommandError(f"cannot read {path}: {e.strerror}", returncode=1)
        return unpack_database(data, params_file.params, tower.field)

    def verify(self, db, indices, result):
        """Compare against the local database; None when there is none."""
        if db is None:
            return None
        for j, recovered in zip(indices, result.files):
            if recovered != db.file(j):
                raise RecoveryMismatchError(f"file {j} differs from the database")
        return True
