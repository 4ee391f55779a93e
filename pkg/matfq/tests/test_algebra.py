import numpy as np
from django.test import SimpleTestCase

from cbpir_lab.exceptions import DimensionMismatchError
from gf.tower import FieldTower
from matfq.algebra import (
    ScalarMultipleCache, delete_row_blocks, kron, right_multiplication_matrix, row_block,
    select_columns,
)
from matfq.matrices import MatFq, MatFqs
from matfq.serialization import (
    pack_matfq, pack_matfqs, read_matfqs, unpack_matfq, unpack_matfqs,
)


class KroneckerTests(SimpleTestCase):
    def setUp(self):
        self.rng = np.random.default_rng(11)
        self.tower = FieldTower.from_seed(2, 3, seed=4)
        self.delta = MatFqs.random(self.tower, 2, 3, self.rng)

    def test_unit_vector_places_delta_in_one_block(self):
        field = self.tower.field
        product = kron(self.delta, MatFq.row(field, [0, 0, 1, 0]))
        self.assertEqual(product.shape, (8, 3))
        for j in range(4):
            block = row_block(product, j, 2)
            if j == 2:
                self.assertEqual(block, self.delta)
            else:
                self.assertTrue(block.is_zero())

    def test_all_ones_repeats_delta(self):
        product = kron(self.delta, self.tower.field([1, 1, 1]))
        for j in range(3):
            self.assertEqual(row_block(product, j, 2), self.delta)

    def test_database_times_kronecker_is_combination_times_delta(self):
        field = self.tower.field
        m, width = 4, self.delta.rows
        x = MatFq.random(field, 3, m * width, self.rng)
        w = field.Random(m, seed=self.rng)
        combination = field.Zeros((3, width))
        for j in range(m):
            combination += w[j] * x.data[:, j * width:(j + 1) * width]
        self.assertEqual(x @ kron(self.delta, w), MatFq(combination) @ self.delta)

    def test_cache_multiplies_each_scalar_once(self):
        cache = ScalarMultipleCache(self.delta)
        kron(self.delta, self.tower.field([3, 1, 3, 0, 1, 3]), cache)
        self.assertEqual(cache.unique, 2)
        self.assertEqual(cache.scalars(), [1, 3])

    def test_cache_for_other_matrix_is_refused(self):
        other = MatFqs.random(self.tower, 2, 3, self.rng)
        with self.assertRaises(DimensionMismatchError):
            kron(self.delta, self.tower.field([1]), ScalarMultipleCache(other))


class ProductTests(SimpleTestCase):
    def setUp(self):
        self.rng = np.random.default_rng(19)
        self.tower = FieldTower.from_seed(2, 3, seed=4)

    def test_right_multiplication_matrix_acts_on_flattened_rows(self):
        a = MatFqs.random(self.tower, 2, 3, self.rng)
        u = MatFqs.random(self.tower, 1, 2, self.rng)
        flat = MatFq(u.data.reshape(1, 6)) @ right_multiplication_matrix(a)
        self.assertEqual(flat, MatFq((u @ a).data.reshape(1, 9)))

    def test_base_field_matrices_embed_on_either_side(self):
        a = MatFqs.random(self.tower, 3, 2, self.rng)
        left = MatFq.random(self.tower.field, 4, 3, self.rng)
        right = MatFq.random(self.tower.field, 2, 5, self.rng)
        embedded_left = MatFqs(self.tower, self.tower.embed(left.data))
        embedded_right = MatFqs(self.tower, self.tower.embed(right.data))
        self.assertEqual(left @ a, embedded_left @ a)
        self.assertEqual(a @ right, a @ embedded_right)

    def test_non_conformal_product_raises(self):
        a = MatFqs.random(self.tower, 3, 2, self.rng)
        with self.assertRaises(DimensionMismatchError):
            a @ a

    def test_adding_across_representations_raises(self):
        a = MatFqs.random(self.tower, 2, 2, self.rng)
        with self.assertRaises(DimensionMismatchError):
            a + MatFq.random(self.tower.field, 2, 2, self.rng)

    def test_block_deletion_keeps_order(self):
        a = MatFq(self.tower.field(np.arange(8).reshape(4, 2) % 4))
        kept = delete_row_blocks(a, [1], 2)
        self.assertEqual(kept, row_block(a, 0, 2))
        self.assertEqual(delete_row_blocks(a, [], 2), a)
        self.assertEqual(delete_row_blocks(a, [0, 1], 2).rows, 0)
        self.assertEqual(select_columns(a, [1]).shape, (4, 1))

    def test_uneven_blocks_are_rejected(self):
        with self.assertRaises(DimensionMismatchError):
            delete_row_blocks(MatFq.zeros(self.tower.field, 5, 2), [0], 2)


class MatrixSerializationTests(SimpleTestCase):
    def setUp(self):
        self.rng = np.random.default_rng(3)
        self.tower = FieldTower.from_seed(2, 3, seed=4)

    def test_header_is_two_little_endian_words(self):
        data = pack_matfq(MatFq.zeros(self.tower.field, 2, 3), 2)
        self.assertEqual(data[:16], (2).to_bytes(8, 'little') + (3).to_bytes(8, 'little'))
        self.assertEqual(len(data), 16 + 2)

    def test_query_sized_matrix_survives_packing(self):
        a = MatFqs.random(self.tower, 12, 6, self.rng)
        self.assertEqual(unpack_matfqs(pack_matfqs(a), self.tower), a)
        x = MatFq.random(self.tower.field, 4, 18, self.rng)
        self.assertEqual(unpack_matfq(pack_matfq(x, 2), self.tower.field, 2), x)

    def test_consecutive_matrices_are_read_by_offset(self):
        a = MatFqs.random(self.tower, 2, 2, self.rng)
        c = MatFqs.random(self.tower, 3, 1, self.rng)
        buffer = pack_matfqs(a) + pack_matfqs(c)
        first, offset = read_matfqs(buffer, self.tower)
        second, end = read_matfqs(buffer, self.tower, offset)
        self.assertEqual((first, second, end), (a, c, len(buffer)))

    def test_truncated_and_trailing_bytes_are_rejected(self):
        data = pack_matfqs(MatFqs.random(self.tower, 2, 2, self.rng))
        with self.assertRaises(DimensionMismatchError):
            unpack_matfqs(data[:-1], self.tower)
        with self.assertRaises(DimensionMismatchError):
            unpack_matfqs(data + b'\0', self.tower)
