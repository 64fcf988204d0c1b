"""
Serializers for the grid-function document.

A document is UTF-8 JSON of the form
``{"dims": n, "axes": [[...], ...], "space": tag, "values": [...]}``
with values listed row-major, axis 0 slowest.
"""
import io

from rest_framework import serializers
from rest_framework.exceptions import ParseError
from rest_framework.parsers import JSONParser
from rest_framework.renderers import JSONRenderer

from core.grid import Grid, GridFunction
from core.semigroup import parse_space

DOCUMENT_ERROR_CODES = (
    'axis_not_increasing',
    'value_count_mismatch',
    'unknown_space',
    'dimension_mismatch',
    'invalid_value',
    'unsupported_kind',
    'expression',
)


class GridSerializer(serializers.Serializer):
    """Serializer for the grid block shared by every document"""
    dims = serializers.IntegerField(min_value=1)
    axes = serializers.ListField(
        child=serializers.ListField(child=serializers.FloatField()),
    )

    def validate(self, attrs):
        """Check the axes and build the grid"""
        axes = attrs['axes']
        if len(axes) != attrs['dims']:
            raise serializers.ValidationError(
                f'{len(axes)} axes given for dims={attrs["dims"]}',
                code='dimension_mismatch',
            )
        for axis in axes:
            if len(axis) < 2 or any(b <= a for a, b in zip(axis, axis[1:])):
                raise serializers.ValidationError(
                    'axis not strictly increasing',
                    code='axis_not_increasing',
                )
        try:
            attrs['grid'] = Grid(tuple(tuple(axis) for axis in axes))
        except ValueError as exc:
            raise serializers.ValidationError(
                str(exc), code='dimension_mismatch') from exc
        return attrs

    def to_representation(self, instance):
        return {
            'dims': instance.dims,
            'axes': [list(axis) for axis in instance.axes],
        }


def validate_space_tag(value):
    try:
        return parse_space(value)
    except ValueError as exc:
        raise serializers.ValidationError(
            str(exc), code='unknown_space') from exc


class GridFunctionSerializer(GridSerializer):
    """Serializer for a whole grid-function document"""
    space = serializers.CharField()
    values = serializers.ListField()

    def validate_space(self, value):
        return validate_space_tag(value)

    def validate(self, attrs):
        attrs = super().validate(attrs)
        grid, space = attrs['grid'], attrs['space']
        node_count = 1
        for m in grid.shape:
            node_count *= m
        if len(attrs['values']) != node_count:
            raise serializers.ValidationError(
                f'value count mismatch: {len(attrs["values"])} values '
                f'for {node_count} nodes',
                code='value_count_mismatch',
            )
        try:
            attrs['function'] = GridFunction(
                grid, space, [space.from_json(v) for v in attrs['values']])
        except ValueError as exc:
            raise serializers.ValidationError(
                str(exc), code='invalid_value') from exc
        return attrs

    def create(self, validated_data):
        """Return the grid function the document describes"""
        return validated_data['function']

    def to_representation(self, instance):
        data = super().to_representation(instance.grid)
        data['space'] = instance.space.tag
        data['values'] = [
            instance.space.to_json(v) for v in instance.flat_values()]
        return data


def parse_document(data):
    """Parse JSON bytes into a dict, as a validation error when malformed"""
    try:
        parsed = JSONParser().parse(io.BytesIO(data))
    except ParseError as exc:
        raise serializers.ValidationError(
            f'malformed document: {exc.detail}', code='malformed') from exc
    if not isinstance(parsed, dict):
        raise serializers.ValidationError(
            'malformed document: top level must be an object',
            code='malformed')
    return parsed


def render_document(data):
    return JSONRenderer().render(data)


def document_error_code(exc):
    """The most specific document error code held by a ValidationError"""
    codes = []

    def collect(node):
        if isinstance(node, dict):
            for child in node.values():
                collect(child)
        elif isinstance(node, (list, tuple)):
            for child in node:
                collect(child)
        else:
            codes.append(node)

    collect(exc.get_codes())
    for code in DOCUMENT_ERROR_CODES:
        if code in codes:
            return code
    return 'malformed'


def load_grid_function(data):
    """Build a GridFunction from document bytes"""
    serializer = GridFunctionSerializer(data=parse_document(data))
    serializer.is_valid(raise_exception=True)
    return serializer.save()


def save_grid_function(function):
    """Render a GridFunction as canonical document bytes"""
    return render_document(GridFunctionSerializer(function).data)
