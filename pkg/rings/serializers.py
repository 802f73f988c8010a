from fractions import Fraction

from rest_framework import serializers


def plain(value):
    """Make report details JSON-safe; rationals become "p/q"."""
    if isinstance(value, Fraction):
        return f"{value.numerator}/{value.denominator}"
    if isinstance(value, dict):
        return {str(k): plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple, set, frozenset)):
        return [plain(v) for v in value]
    return value


class RationalField(serializers.Field):
    default_error_messages = {"invalid": "Expected a rational of the form p/q."}

    def to_representation(self, value):
        value = Fraction(value)
        return f"{value.numerator}/{value.denominator}"

    def to_internal_value(self, data):
        try:
            return Fraction(str(data))
        except (ValueError, ZeroDivisionError):
            self.fail("invalid")


class BoundSerializer(serializers.Serializer):
    id = serializers.CharField()
    lower = RationalField(required=False, allow_null=True)
    upper = RationalField(required=False, allow_null=True)
    attained = serializers.BooleanField()
    holds = serializers.BooleanField()

    def to_representation(self, instance):
        data = super().to_representation(instance)
        for side in ("lower", "upper"):
            if data.get(side) is None:
                data.pop(side, None)
        return data


class ConditionSerializer(serializers.Serializer):
    name = serializers.CharField()
    kind = serializers.CharField()
    attained = serializers.BooleanField()
    expected = serializers.BooleanField()
    ok = serializers.BooleanField()


class ReportSerializer(serializers.Serializer):
    ring = serializers.CharField()
    k = serializers.IntegerField(allow_null=True)
    value = RationalField(allow_null=True)
    bounds = BoundSerializer(many=True)
    conditions = ConditionSerializer(many=True)
    flags = serializers.SerializerMethodField()
    details = serializers.SerializerMethodField()
    violations = serializers.ListField(child=serializers.CharField())
    passed = serializers.BooleanField()
    scope = serializers.CharField(allow_blank=True)

    def get_flags(self, obj):
        return plain(obj.flags)

    def get_details(self, obj):
        return plain(obj.details)


class TableRowSerializer(serializers.Serializer):
    ring = serializers.CharField()
    k = serializers.IntegerField()
    expected = RationalField()
    computed = RationalField()
    passed = serializers.BooleanField()


class RunResultSerializer(serializers.Serializer):
    verb = serializers.CharField(source="command.verb")
    passed = serializers.BooleanField()
    exit_code = serializers.IntegerField()
    reports = ReportSerializer(many=True)
    rows = TableRowSerializer(many=True)
