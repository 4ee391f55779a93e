from django.core.exceptions import ValidationError
from django.test import SimpleTestCase
from rest_framework import serializers

from scheme.params import ParamsFile, SchemeParams
from scheme.serializers import SchemeParamsSerializer, parse_params

DESK = {'b': 1, 's': 4, 'v': 2, 'n': 6, 'k': 3, 'm': 8, 'L': 4, 'f': 1}


class SchemeParamsTests(SimpleTestCase):
    def test_derived_quantities(self):
        params = SchemeParams.validated(**DESK)
        self.assertEqual(params.q, 2)
        self.assertEqual(params.delta, 6)
        self.assertEqual(params.ns, 24)

    def test_binary_field_rejects_multi_file_batches(self):
        with self.assertRaises(ValidationError) as ctx:
            SchemeParams.validated(**{**DESK, 'f': 2})
        self.assertIn('f', ctx.exception.message_dict)
        self.assertIn('M̃ feasibility', ctx.exception.message_dict['f'][0])

    def test_full_split_index_is_rejected(self):
        with self.assertRaises(ValidationError) as ctx:
            SchemeParams.validated(**{**DESK, 'v': 4})
        self.assertIn('v', ctx.exception.message_dict)

    def test_every_violation_is_reported(self):
        with self.assertRaises(ValidationError) as ctx:
            SchemeParams.validated(**{**DESK, 'k': 6, 'L': 0, 'f': 8})
        self.assertEqual(set(ctx.exception.message_dict), {'k', 'L', 'f'})

    def test_weight_goal_defaults(self):
        self.assertEqual(SchemeParams(**DESK).weight_goal, 7)
        self.assertEqual(SchemeParams(**{**DESK, 'b': 2, 'f': 2}).weight_goal, 8)
        self.assertEqual(SchemeParams(**{**DESK, 'b': 2, 'weight_target': 5}).weight_goal, 5)

    def test_binary_weight_target_above_m_minus_f_is_rejected(self):
        with self.assertRaises(ValidationError) as ctx:
            SchemeParams.validated(**{**DESK, 'weight_target': 8})
        self.assertIn('weight_target', ctx.exception.message_dict)


class ParamsFileSerializerTests(SimpleTestCase):
    def test_valid_document_builds_params_file(self):
        params_file = parse_params({**DESK, 'seed': 12})
        self.assertIsInstance(params_file, ParamsFile)
        self.assertEqual(params_file.params, SchemeParams(**DESK))
        self.assertEqual(params_file.seed, 12)
        self.assertEqual(params_file.tower_seed, 0)

    def test_representation_is_the_document(self):
        params_file = parse_params({**DESK, 'seed': 3, 'tower_seed': 9})
        document = SchemeParamsSerializer(params_file).data
        self.assertEqual(document, {**DESK, 'weight_target': None, 'seed': 3, 'tower_seed': 9})
        self.assertEqual(parse_params(document), params_file)

    def test_field_level_constraints(self):
        serializer = SchemeParamsSerializer(data={**DESK, 'b': 0})
        self.assertFalse(serializer.is_valid())
        self.assertIn('b', serializer.errors)

    def test_model_clean_errors_are_keyed_by_parameter(self):
        serializer = SchemeParamsSerializer(data={**DESK, 'f': 2})
        self.assertFalse(serializer.is_valid())
        self.assertIn('f', serializer.errors)

    def test_missing_key_raises(self):
        document = dict(DESK)
        del document['n']
        with self.assertRaises(serializers.ValidationError):
            parse_params(document)

    def test_tower_follows_tower_seed(self):
        first = parse_params({**DESK, 'b': 2, 'tower_seed': 4}).tower()
        second = parse_params({**DESK, 'b': 2, 'tower_seed': 4, 'seed': 99}).tower()
        self.assertEqual(first, second)
