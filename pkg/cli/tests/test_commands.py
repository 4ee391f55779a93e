import csv
import hashlib
import io
import json
import math
import tempfile
import threading
from fractions import Fraction
from pathlib import Path

from django.conf import settings
from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase, override_settings

from analysis.rates import rate_exact, rate_reusing_beta
from scheme.params import SchemeParams
from wire.handler import handler_from_files
from wire.server import PIRServer

REFERENCE = {'b': 5, 's': 32, 'v': 24, 'n': 100, 'k': 50, 'm': 100, 'L': 1, 'f': 1}
DESK = {'b': 1, 's': 4, 'v': 2, 'n': 6, 'k': 3, 'm': 8, 'L': 4, 'f': 1, 'seed': 11}
QUATERNARY = {'b': 2, 's': 4, 'v': 2, 'n': 6, 'k': 3, 'm': 8, 'L': 4, 'f': 2, 'seed': 3, 'tower_seed': 1}


class CommandTestCase(SimpleTestCase):
    def setUp(self):
        workdir = tempfile.TemporaryDirectory()
        self.addCleanup(workdir.cleanup)
        self.dir = Path(workdir.name)

    def params_file(self, document, name='params.json'):
        path = self.dir / name
        path.write_text(json.dumps(document), encoding='utf-8')
        return str(path)

    def run_command(self, *args, **options):
        out = io.StringIO()
        call_command(*args, stdout=out, stderr=io.StringIO(), **options)
        return out.getvalue()


class ValidateCommandTests(CommandTestCase):
    def test_reference_parameters(self):
        output = self.run_command('validate', params=self.params_file(REFERENCE))
        self.assertIn('delta: 400', output)
        self.assertIn('rate_asymptotic: 1/16', output)
        self.assertIn('weight_threshold: 93', output)
        self.assertIn('m0_increment: 7', output)
        self.assertIn('parameters are valid', output)

    def test_batch_over_the_binary_field_is_rejected(self):
        with self.assertRaises(CommandError) as caught:
            self.run_command('validate', params=self.params_file({**DESK, 'f': 2}))
        self.assertIn('M̃ feasibility', str(caught.exception))
        self.assertEqual(caught.exception.returncode, 1)

    def test_empty_payload_space_is_rejected(self):
        with self.assertRaises(CommandError) as caught:
            self.run_command('validate', params=self.params_file({**DESK, 'v': 4}))
        self.assertIn('δ would be 0', str(caught.exception))

    def test_unreadable_params(self):
        with self.assertRaises(CommandError) as caught:
            self.run_command('validate', params=str(self.dir / 'missing.json'))
        self.assertEqual(caught.exception.returncode, 1)
        (self.dir / 'broken.json').write_text('{', encoding='utf-8')
        with self.assertRaises(CommandError):
            self.run_command('validate', params=str(self.dir / 'broken.json'))


class GenDbCommandTests(CommandTestCase):
    def test_database_file_is_deterministic_per_seed(self):
        params = self.params_file(DESK)
        paths = [self.dir / name for name in ('a.db', 'b.db', 'c.db')]
        self.run_command('gendb', params=params, out=str(paths[0]))
        self.run_command('gendb', params=params, out=str(paths[1]))
        self.run_command('gendb', params=params, out=str(paths[2]), seed=12)
        first, second, third = (path.read_bytes() for path in paths)
        self.assertEqual(len(first), 16 + 16 + 4 * 8 * 6 * 1 // 8)
        self.assertEqual(first, second)
        self.assertNotEqual(hashlib.sha256(first).digest(), hashlib.sha256(third).digest())


class RetrieveCommandTests(CommandTestCase):
    def make_database(self, document):
        params = self.params_file(document)
        db = self.dir / 'x.db'
        self.run_command('gendb', params=params, out=str(db))
        return params, str(db)

    def test_in_process_batches_recover_and_match_the_rate_formula(self):
        for document in (DESK, QUATERNARY):
            params, db = self.make_database(document)
            out = self.dir / 'run'
            self.run_command('retrieve', params=params, db=db, batches=5, out=str(out))
            transcript = json.loads((out / 'transcript.json').read_text(encoding='utf-8'))
            expected = rate_exact(SchemeParams(**{k: document[k] for k in REFERENCE})).exact_rate
            self.assertEqual(transcript['seed'], document['seed'])
            self.assertEqual(len(transcript['params_hash']), 64)
            self.assertEqual(len(transcript['batches']), 5)
            for batch in transcript['batches']:
                self.assertTrue(batch['verified'])
                self.assertEqual(batch['queries'], document['f'] + 1)
                self.assertEqual(Fraction(batch['rate']), expected)

    def test_reused_beta_needs_f_queries(self):
        params, db = self.make_database(QUATERNARY)
        output = self.run_command('retrieve', params=params, db=db, batches=3, reuse_beta=True)
        batches = json.loads(output)['batches']
        self.assertEqual([batch['queries'] for batch in batches], [3, 2, 2])
        reuse = rate_reusing_beta(SchemeParams(**{k: QUATERNARY[k] for k in REFERENCE})).exact_rate
        self.assertEqual(Fraction(batches[1]['rate']), reuse)

    def test_fixed_indices(self):
        params, db = self.make_database(DESK)
        batch = json.loads(self.run_command('retrieve', params=params, db=db, indices='5'))['batches'][0]
        self.assertEqual(batch['indices'], [5])
        with self.assertRaises(CommandError) as caught:
            self.run_command('retrieve', params=params, db=db, indices='8')
        self.assertEqual(caught.exception.returncode, 2)

    def test_retrieval_through_a_server(self):
        params, db = self.make_database(DESK)
        server = PIRServer(('127.0.0.1', 0), handler_from_files(params, db))
        threading.Thread(target=server.serve_forever, daemon=True).start()
        self.addCleanup(server.server_close)
        self.addCleanup(server.shutdown)
        output = self.run_command('retrieve', params=params, db=db, endpoint=server.endpoint, batches=2)
        transcript = json.loads(output)
        self.assertEqual(transcript['transport'], server.endpoint)
        self.assertTrue(all(batch['verified'] for batch in transcript['batches']))

    def test_malformed_database_file(self):
        params, db = self.make_database(DESK)
        data = Path(db).read_bytes()
        Path(db).write_bytes(data[:-1])
        with self.assertRaises(CommandError) as caught:
            self.run_command('retrieve', params=params, db=db)
        self.assertEqual(caught.exception.returncode, 1)
        self.assertIn('schema', str(caught.exception))

    def test_transport_is_required(self):
        with self.assertRaises(CommandError):
            self.run_command('retrieve', params=self.params_file(DESK))


class AttackCommandTests(CommandTestCase):
    def test_original_scheme_report(self):
        out = self.dir / 'trials.csv'
        ranks = self.dir / 'ranks.csv'
        output = self.run_command('attack', params=self.params_file(DESK), scheme='original', trials=10,
                                  out=str(out), ranks=str(ranks))
        with open(out, newline='') as handle:
            rows = list(csv.DictReader(handle))
        self.assertEqual(len(rows), 10)
        self.assertTrue(all(row['target_kind'] == 'original' and row['subsets'] == '8' for row in rows))
        self.assertIn('single attack on original queries: success rate', output)
        with open(ranks, newline='') as handle:
            lines = list(csv.reader(handle))
        # per trial: marker, header, 8 single blocks, summary
        self.assertEqual(len(lines), 10 * 11)

    def test_full_weight_enumerates_nothing(self):
        output = self.run_command('attack', params=self.params_file(DESK), scheme='modified', trials=3, weight=8)
        rows = list(csv.DictReader(io.StringIO(output.split('subset attack')[0])))
        self.assertEqual([row['subsets'] for row in rows], ['0', '0', '0'])

    def test_single_block_attack_on_full_weight_queries(self):
        trials = 40
        out = self.dir / 'single.csv'
        params = self.params_file({**QUATERNARY, 'f': 1})
        output = self.run_command('attack', params=params, scheme='modified', attack='single', trials=trials,
                                  out=str(out))
        with open(out, newline='') as handle:
            rows = list(csv.DictReader(handle))
        self.assertEqual(len(rows), trials)
        self.assertTrue(all(row['target_kind'] == 'modified' and row['subsets'] == '8' for row in rows))
        wins = sum(int(row['success']) for row in rows)
        sigma = math.sqrt((1 / 8) * (1 - 1 / 8) / trials)
        self.assertLessEqual(wins / trials, 1 / 8 + 3 * sigma)
        self.assertIn('single attack on modified queries', output)

    def test_single_block_attack_takes_no_weight(self):
        with self.assertRaises(CommandError) as caught:
            self.run_command('attack', params=self.params_file(DESK), scheme='modified', attack='single', weight=3)
        self.assertEqual(caught.exception.returncode, 2)

    @override_settings(CBPIR={**settings.CBPIR, 'ENUMERATION_CAP': 10})
    def test_enumeration_cap(self):
        params = self.params_file(DESK)
        with self.assertRaises(CommandError) as caught:
            self.run_command('attack', params=params, scheme='modified', trials=1, weight=3)
        self.assertIn('EnumerationCapExceeded', str(caught.exception))
        output = self.run_command('attack', params=params, scheme='modified', trials=1, weight=3, allow_large=True)
        self.assertIn('over 1 trials', output)


class TablesCommandTests(CommandTestCase):
    def test_tables_are_written(self):
        self.run_command('tables', out=str(self.dir))
        with open(self.dir / 'rates.csv', newline='') as handle:
            rates = list(csv.reader(handle))
        self.assertEqual(len(rates), 13)
        self.assertIn(['16', '32', '16', '100', '50', '800', '4', '1', '5'], rates)
        with open(self.dir / 'fig3.csv', newline='') as handle:
            fig3 = list(csv.DictReader(handle))
        self.assertEqual(len(fig3), 101 + 10_001)
        onsets = {}
        for row in fig3:
            if row['region'] == 'green':
                onsets.setdefault(row['m'], int(row['wt']))
        self.assertEqual(onsets, {'100': 93, '10000': 9993})
        self.assertTrue((self.dir / 'bounds.csv').exists())
