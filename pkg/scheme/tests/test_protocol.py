from unittest import mock

import numpy as np
from django.test import SimpleTestCase

from cbpir_lab.exceptions import DimensionMismatchError, SamplingCapExceeded, ScalarCacheMismatchError
from gf.tower import FieldTower
from lincode.decomposition import direct_sum_decompose
from matfq.algebra import kron, row_block
from matfq.matrices import MatFq, MatFqs
from scheme.batch import LocalTransport, retrieve_batch, spread_weight_row
from scheme.database import Database
from scheme.params import SchemeParams
from scheme.plan import build_secret_plan, recover_files
from scheme.query import decode_response, gen_query, gen_query_original, server_respond

BINARY = SchemeParams(b=1, s=4, v=2, n=6, k=3, m=8, L=4, f=1)
QUATERNARY = SchemeParams(b=2, s=4, v=2, n=6, k=3, m=8, L=4, f=2)


class SecretPlanTests(SimpleTestCase):
    def setUp(self):
        self.rng = np.random.default_rng(50)

    def test_binary_single_file_plan_flips_one_position(self):
        field = FieldTower.from_seed(1, 4).field
        plan = build_secret_plan(BINARY, field, [5], self.rng)
        self.assertEqual(plan.mixing, MatFq(field([[1, 1]])))
        self.assertEqual(plan.beta.weight(), 8)
        expected = np.ones(8, dtype=int)
        expected[5] = 0
        self.assertTrue(np.array_equal(plan.rows.data[0].view(np.ndarray), expected))
        self.assertEqual(plan.weights(), [7])

    def test_larger_field_reaches_full_weight(self):
        tower = FieldTower.from_seed(2, 4, seed=1)
        params = SchemeParams(b=2, s=4, v=2, n=6, k=3, m=8, L=4, f=1)
        for _ in range(20):
            plan = build_secret_plan(params, tower.field, [2], self.rng)
            self.assertEqual(plan.weights(), [8])

    def test_left_block_is_invertible_and_rows_are_heavy(self):
        field = FieldTower.from_seed(2, 4, seed=1).field
        for _ in range(20):
            plan = build_secret_plan(QUATERNARY, field, [1, 6], self.rng)
            self.assertNotEqual(np.linalg.det(plan.mixing.data[:, :2]), 0)
            self.assertTrue(all(w >= QUATERNARY.m - QUATERNARY.f for w in plan.weights()))
            self.assertEqual(plan.mixing.weight(), 6)
            self.assertTrue(np.array_equal(plan.rows.data[2], plan.beta.data[0]))

    def test_infeasible_weight_exhausts_the_cap(self):
        field = FieldTower.from_seed(1, 4).field
        params = SchemeParams(b=1, s=4, v=2, n=6, k=3, m=8, L=4, f=1, weight_target=8)
        with self.assertRaises(SamplingCapExceeded):
            build_secret_plan(params, field, [0], self.rng, cap=5)

    def test_bad_indices_are_rejected(self):
        field = FieldTower.from_seed(2, 4, seed=1).field
        with self.assertRaises(ValueError):
            build_secret_plan(QUATERNARY, field, [1, 1], self.rng)
        with self.assertRaises(ValueError):
            build_secret_plan(QUATERNARY, field, [1, 8], self.rng)

    def test_binary_recovery_adds_the_two_combinations(self):
        field = FieldTower.from_seed(1, 4).field
        plan = build_secret_plan(BINARY, field, [3], self.rng)
        db = Database.random(BINARY, field, self.rng)
        combinations = [db.combination(row) for row in plan.secret_rows()]
        self.assertEqual(combinations[0] + combinations[1], db.file(3))
        self.assertEqual(recover_files(plan, combinations), [db.file(3)])

    def test_zero_database_recovers_zero_files(self):
        field = FieldTower.from_seed(2, 4, seed=1).field
        plan = build_secret_plan(QUATERNARY, field, [0, 7], self.rng)
        zero = MatFq.zeros(field, 4, 6)
        files = recover_files(plan, [zero, zero, zero])
        self.assertTrue(all(f.weight() == 0 for f in files))


class QueryTests(SimpleTestCase):
    def setUp(self):
        self.rng = np.random.default_rng(17)
        self.tower = FieldTower.from_seed(1, 4)
        self.db = Database.random(BINARY, self.tower.field, self.rng)

    def test_unit_secret_row_puts_delta_in_one_block(self):
        secret, _ = gen_query_original(BINARY, self.tower, 4, self.rng)
        payload = secret.components.payload
        for j in range(BINARY.m):
            block = row_block(payload, j, BINARY.delta)
            self.assertEqual(block.is_zero(), j != 4)
        self.assertEqual(secret.unique_scalar_multiples, 1)

    def test_original_query_retrieves_the_file(self):
        for index in range(BINARY.m):
            secret, query = gen_query_original(BINARY, self.tower, index, self.rng)
            self.assertEqual(query.shape, (BINARY.m * BINARY.delta, BINARY.n))
            response = server_respond(self.db, query)
            self.assertEqual(decode_response(secret, response), self.db.file(index))

    def test_zero_secret_row_leaves_no_w_part(self):
        secret, query = gen_query(BINARY, self.tower, self.tower.field.Zeros(BINARY.m), self.rng)
        parts = direct_sum_decompose(secret.code, secret.basis, query)
        self.assertTrue(parts.w_part.is_zero())
        self.assertEqual(parts.codeword, secret.components.codewords)

    def test_query_rows_split_into_their_components(self):
        tower = FieldTower.from_seed(2, 4, seed=1)
        row = spread_weight_row(tower.field, QUATERNARY.m, 5, self.rng)
        secret, query = gen_query(QUATERNARY, tower, row, self.rng)
        parts = direct_sum_decompose(secret.code, secret.basis, query)
        self.assertEqual(parts.codeword, secret.components.codewords)
        self.assertEqual(parts.v_part, secret.components.noise)
        self.assertEqual(parts.w_part, secret.components.payload)

    def test_transform_is_invertible(self):
        secret, _ = gen_query_original(BINARY, self.tower, 0, self.rng)
        self.assertEqual(secret.transform @ secret.transform_inverse,
                         MatFq.identity(self.tower.field, BINARY.delta))

    def test_zero_database_answers_zero(self):
        zero = Database(BINARY, MatFq.zeros(self.tower.field, BINARY.L, BINARY.m * BINARY.delta))
        secret, query = gen_query_original(BINARY, self.tower, 2, self.rng)
        response = server_respond(zero, query)
        self.assertTrue(response.is_zero())
        self.assertEqual(decode_response(secret, response).weight(), 0)

    def test_response_is_the_sum_of_block_products(self):
        _, query = gen_query_original(BINARY, self.tower, 1, self.rng)
        total = MatFqs.zeros(self.tower, BINARY.L, BINARY.n)
        for j in range(BINARY.m):
            total = total + self.db.file(j) @ row_block(query, j, BINARY.delta)
        self.assertEqual(server_respond(self.db, query), total)

    def test_single_file_database_answers_file_times_delta(self):
        params = SchemeParams(b=1, s=4, v=2, n=6, k=3, m=1, L=2, f=1)
        db = Database.random(params, self.tower.field, self.rng)
        secret, query = gen_query(params, self.tower, [1], self.rng)
        delta = secret.components.payload
        noise = secret.components.codewords + secret.components.noise
        self.assertEqual(server_respond(db, query), db.file(0) @ delta + db.file(0) @ noise)
        self.assertEqual(decode_response(secret, server_respond(db, query)), db.file(0))

    def test_mismatched_query_is_rejected(self):
        with self.assertRaises(DimensionMismatchError):
            server_respond(self.db, MatFqs.zeros(self.tower, 5, BINARY.n))

    def test_heavy_secret_row_decodes_to_the_combination(self):
        tower = FieldTower.from_seed(2, 4, seed=1)
        db = Database.random(QUATERNARY, tower.field, self.rng)
        for weight in (1, 4, 8):
            row = spread_weight_row(tower.field, QUATERNARY.m, weight, self.rng)
            secret, query = gen_query(QUATERNARY, tower, row, self.rng)
            self.assertEqual(decode_response(secret, server_respond(db, query)), db.combination(row))
            self.assertEqual(secret.unique_scalar_multiples, min(weight, 3))

    def test_repeated_scalars_are_multiplied_once(self):
        tower = FieldTower.from_seed(2, 4, seed=1)
        row = MatFq(tower.field([[2, 2, 2, 0, 2, 0, 0, 2]]))
        secret, _ = gen_query(QUATERNARY, tower, row, self.rng)
        self.assertEqual(secret.unique_scalar_multiples, 1)

    def test_unused_scalar_cache_is_detected(self):
        row = MatFq(self.tower.field([[1, 0, 1, 0, 0, 0, 0, 0]]))
        with mock.patch('scheme.query.kron', side_effect=lambda delta, vector, cache: kron(delta, vector)):
            with self.assertRaises(ScalarCacheMismatchError):
                gen_query(BINARY, self.tower, row, self.rng)


class BatchRetrievalTests(SimpleTestCase):
    def run_batches(self, params, tower_seed, trials, seed):
        tower = FieldTower.from_seed(params.b, params.s, seed=tower_seed)
        rng = np.random.default_rng(seed)
        for _ in range(trials):
            db = Database.random(params, tower.field, rng)
            indices = sorted(rng.choice(params.m, size=params.f, replace=False))
            result = retrieve_batch(params, tower, LocalTransport(db), indices, rng)
            self.assertEqual(result.files, [db.file(j) for j in indices])
            self.assertEqual(result.transcript.queries, params.f + 1)

    def test_binary_single_file_batches(self):
        self.run_batches(BINARY, tower_seed=0, trials=50, seed=1000)

    def test_quaternary_two_file_batches(self):
        self.run_batches(QUATERNARY, tower_seed=1, trials=50, seed=2000)

    def test_transcript_counts_every_bit(self):
        tower = FieldTower.from_seed(2, 4, seed=1)
        rng = np.random.default_rng(3)
        db = Database.random(QUATERNARY, tower.field, rng)
        transcript = retrieve_batch(QUATERNARY, tower, LocalTransport(db), [0, 1], rng).transcript
        p = QUATERNARY
        self.assertEqual(transcript.upload_bits, 3 * p.m * p.delta * p.n * p.s * p.b)
        self.assertEqual(transcript.download_bits, 3 * p.L * p.n * p.s * p.b)
        self.assertEqual(transcript.payload_bits, 2 * p.L * p.delta * p.b)

    def test_stored_beta_response_serves_a_second_batch(self):
        tower = FieldTower.from_seed(2, 4, seed=1)
        rng = np.random.default_rng(4)
        db = Database.random(QUATERNARY, tower.field, rng)
        transport = LocalTransport(db)
        first = retrieve_batch(QUATERNARY, tower, transport, [0, 5], rng)
        stored = first.stored_beta()
        second = retrieve_batch(QUATERNARY, tower, transport, [2, 7], rng, reuse=stored)
        self.assertEqual(second.files, [db.file(2), db.file(7)])
        self.assertEqual(second.transcript.queries, QUATERNARY.f)
        self.assertEqual(second.plan.beta, first.plan.beta)


class SpreadWeightRowTests(SimpleTestCase):
    def test_weight_and_distinct_values(self):
        rng = np.random.default_rng(6)
        for b, weight, distinct in ((1, 5, 1), (2, 2, 2), (2, 7, 3), (5, 40, 31)):
            field = FieldTower.from_seed(b, 2).field
            row = spread_weight_row(field, 40, weight, rng)
            values = row.data[0].view(np.ndarray)
            self.assertEqual(row.weight(), weight)
            self.assertEqual(len(set(values[values != 0].tolist())), distinct)
