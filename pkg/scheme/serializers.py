import json

from django.core.exceptions import ValidationError as DjangoValidationError
from rest_framework import serializers

from .params import ParamsFile, SchemeParams

PARAM_KEYS = ('b', 's', 'v', 'n', 'k', 'm', 'L', 'f', 'weight_target')


class SchemeParamsSerializer(serializers.Serializer):
    """Parses a ParamsFile JSON document into protocol parameters and seeds"""
    # b, s, v, f travel as single bytes and n, k as u16 in file headers
    b = serializers.IntegerField(min_value=1, max_value=16)
    s = serializers.IntegerField(min_value=2, max_value=255)
    v = serializers.IntegerField(min_value=0, max_value=255)
    n = serializers.IntegerField(min_value=2, max_value=65535)
    k = serializers.IntegerField(min_value=0, max_value=65535)
    m = serializers.IntegerField(min_value=1)
    L = serializers.IntegerField(min_value=1)
    f = serializers.IntegerField(min_value=1, max_value=255, default=1)
    seed = serializers.IntegerField(min_value=0, default=0)
    tower_seed = serializers.IntegerField(min_value=0, default=0)
    weight_target = serializers.IntegerField(min_value=1, required=False, allow_null=True, default=None)

    def validate(self, attrs):
        params = SchemeParams(**{key: attrs.get(key) for key in PARAM_KEYS})
        try:
            params.clean()
        except DjangoValidationError as e:
            raise serializers.ValidationError(e.message_dict)
        return attrs

    def create(self, validated_data):
        params = SchemeParams(**{key: validated_data.get(key) for key in PARAM_KEYS})
        return ParamsFile(params, seed=validated_data['seed'], tower_seed=validated_data['tower_seed'])

    def to_representation(self, instance):
        if isinstance(instance, ParamsFile):
            return instance.as_dict()
        return super().to_representation(instance)


def parse_params(document):
    """Validated ParamsFile from a decoded JSON document; raises serializers.ValidationError."""
    serializer = SchemeParamsSerializer(data=document)
    serializer.is_valid(raise_exception=True)
    return serializer.save()


def load_params_file(path):
    with open(path, encoding='utf-8') as handle:
        return parse_params(json.load(handle))
