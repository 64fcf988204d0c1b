"""
Serializers for sequence specs, dual lists and selection results
"""
from rest_framework import serializers

from core.exceptions import ExpressionError
from core.serializers import (
    GridFunctionSerializer,
    GridSerializer,
    parse_document,
    validate_space_tag,
)
from selection.sequences import expression_sequence

SEQUENCE_KINDS = ('expression',)


class SequenceSpecSerializer(serializers.Serializer):
    """
    Serializer for ``{"grid": {...}, "space": tag, "kind": "expression",
    "expression": ..., "probe": N}``
    """
    grid = GridSerializer()
    space = serializers.CharField()
    kind = serializers.CharField()
    expression = serializers.JSONField()
    probe = serializers.IntegerField(min_value=1)

    def validate_space(self, value):
        return validate_space_tag(value)

    def validate_kind(self, value):
        if value not in SEQUENCE_KINDS:
            raise serializers.ValidationError(
                f'unsupported sequence kind {value!r}',
                code='unsupported_kind')
        return value

    def validate(self, attrs):
        """Compile the expression block against the grid and space"""
        grid = attrs['grid']['grid']
        try:
            attrs['sequence'] = expression_sequence(
                grid, attrs['space'], attrs['expression'])
        except ExpressionError as exc:
            raise serializers.ValidationError(
                str(exc), code='expression') from exc
        except ValueError as exc:
            raise serializers.ValidationError(
                str(exc), code='invalid_value') from exc
        return attrs

    def create(self, validated_data):
        """Return the sequence and its probe window"""
        return validated_data['sequence'], validated_data['probe']


class DualsSerializer(serializers.Serializer):
    """Serializer for ``{"duals": [[...], ...]}``"""
    duals = serializers.ListField(
        child=serializers.ListField(
            child=serializers.FloatField(), min_length=1),
        min_length=1,
    )


class SelectionResultSerializer(serializers.Serializer):
    indices = serializers.ListField(child=serializers.IntegerField())
    limit = GridFunctionSerializer()
    sup_tv = serializers.FloatField()
    limit_tv = serializers.FloatField()
    max_residual = serializers.FloatField()
    epsilon = serializers.FloatField()
    probe = serializers.IntegerField()
    diagnostics = serializers.DictField()


def load_sequence_spec(data):
    """Build (sequence, probe) from sequence-spec bytes"""
    serializer = SequenceSpecSerializer(data=parse_document(data))
    serializer.is_valid(raise_exception=True)
    return serializer.save()


def load_duals(data):
    serializer = DualsSerializer(data=parse_document(data))
    serializer.is_valid(raise_exception=True)
    return serializer.validated_data['duals']
