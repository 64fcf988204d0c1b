"""
Serializers for variation results
"""
from rest_framework import serializers

LABELLED_DIMENSIONS = 3


class VariationReportSerializer(serializers.Serializer):
    """Serializer for a VariationReport"""
    tv = serializers.FloatField()
    vitali_n = serializers.FloatField()
    per_alpha = serializers.SerializerMethodField()
    labels = serializers.SerializerMethodField()
    shape = serializers.ListField(child=serializers.IntegerField())
    space = serializers.CharField()
    tolerance = serializers.FloatField()
    degenerate = serializers.ListField(child=serializers.CharField())

    def get_per_alpha(self, obj):
        return {alpha.bits: value for alpha, value in obj.per_alpha.items()}

    def get_labels(self, obj):
        """Expansion labels for one, two and three variables"""
        if len(obj.shape) > LABELLED_DIMENSIONS:
            return {}
        return {row['alpha']: row['label'] for row in obj.labelled()}


class MonotonicityVerdictSerializer(serializers.Serializer):
    monotone = serializers.BooleanField()
    alpha = serializers.SerializerMethodField()
    cell = serializers.SerializerMethodField()
    increment = serializers.FloatField(allow_null=True)

    def get_alpha(self, obj):
        return obj.alpha.bits if obj.alpha is not None else None

    def get_cell(self, obj):
        if obj.cell is None:
            return None
        return {'lo': list(obj.cell.lo), 'hi': list(obj.cell.hi)}
