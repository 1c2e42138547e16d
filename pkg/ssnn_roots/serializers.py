"""
Serializers for batch input records and report output.
"""
# pylint: disable=abstract-method
from rest_framework import serializers

from ssnn_roots.poly_core import format_polynomial, validate_delta
from ssnn_roots.radicals import ExactQuadraticRoots
from ssnn_roots.utils import mp_to_str, parse_rational, rational_to_str


class RationalField(serializers.Field):
    """
    Exact rational, read from "p/q" strings or integers and written as "p/q".
    """
    default_error_messages = {
        'invalid': '"{value}" is not an exact rational ("p/q" or an integer).',
    }

    def to_internal_value(self, data):
        try:
            return parse_rational(data)
        except (TypeError, ValueError, ZeroDivisionError):
            self.fail('invalid', value=data)

    def to_representation(self, value):
        return rational_to_str(value)


class MpfField(serializers.Field):
    """
    Multiprecision float written as a decimal string at the run precision.

    The precision is read from the serializer context (`precision`), 53 bits
    when absent.
    """
    def to_representation(self, value):
        return mp_to_str(value, self.context.get('precision', 53))


class TextField(serializers.Field):
    """ Anything with a meaningful str(). """
    def to_representation(self, value):
        return str(value)


class DeltaRecordSerializer(serializers.Serializer):
    """
    One input record: a delta-vector of exact rationals plus an optional label.
    """
    delta = serializers.ListField(child=RationalField(), min_length=2)
    label = serializers.CharField(required=False, allow_blank=True, max_length=255)

    def validate_delta(self, value):
        return validate_delta(value)


class ComplexRootSerializer(serializers.Serializer):
    re = MpfField()
    im = MpfField()
    error_radius = serializers.FloatField()
    residual = serializers.FloatField()
    is_real_certified = serializers.BooleanField()
    multiplicity = serializers.IntegerField()


class BoundCheckSerializer(serializers.Serializer):
    """
    Serialization of a BoundCheck verdict.
    """
    kind = serializers.CharField()
    degree = serializers.IntegerField()
    passed = serializers.BooleanField()
    lower = RationalField(required=False, allow_null=True)
    upper = RationalField(required=False, allow_null=True)
    radius = RationalField(required=False, allow_null=True)
    worst_margin = serializers.FloatField(allow_null=True)
    violators = serializers.SerializerMethodField()
    notes = serializers.ListField(child=serializers.CharField())
    details = serializers.SerializerMethodField()

    def get_violators(self, obj):
        """Roots render as roots, isolating intervals as [lo, hi] pairs."""
        rendered = []
        for violator in obj.violators:
            if isinstance(violator, tuple):
                rendered.append([rational_to_str(bound) for bound in violator])
            else:
                rendered.append(ComplexRootSerializer(violator, context=self.context).data)
        return rendered

    def get_details(self, obj):
        details = {}
        for key, value in obj.details.items():
            if isinstance(value, tuple):
                value = [rational_to_str(item) for item in value]
            details[key] = value
        return details


class QuarticAnalysisSerializer(serializers.Serializer):
    """
    Serialization of a QuarticAnalysis; float quantities are null in the real regime.
    """
    b = RationalField()
    c = RationalField()
    d = serializers.IntegerField()
    G_coeffs = serializers.ListField(child=RationalField())
    discriminant = RationalField()
    region = serializers.CharField()
    passed = serializers.BooleanField()
    b_interval = TextField(allow_null=True)
    interval_agrees = serializers.BooleanField()
    r = MpfField(allow_null=True)
    r_cos_theta = MpfField(allow_null=True)
    real_part_magnitude = MpfField(allow_null=True)
    bound = MpfField(allow_null=True)
    margin = MpfField(allow_null=True)


class RealizationPlanSerializer(serializers.Serializer):
    d = serializers.IntegerField()
    k = serializers.IntegerField()
    parity = serializers.CharField()
    a = RationalField()
    delta = serializers.ListField(child=RationalField())
    reduced_quadratic = serializers.ListField(child=RationalField())
    realized_offset = TextField()
    realized_roots = serializers.SerializerMethodField()

    def get_realized_roots(self, obj):
        return str(obj.realized_roots)


class CatalogEntrySerializer(serializers.Serializer):
    """
    Serialization of a CatalogEntry, as written to the catalog export.
    """
    label = serializers.CharField()
    delta = serializers.SerializerMethodField()
    closed_form_roots = serializers.SerializerMethodField()
    provenance = serializers.CharField()
    published_roots = serializers.SerializerMethodField()
    notes = serializers.ListField(child=serializers.CharField())
    ehrhart_obstructions = serializers.ListField(child=serializers.CharField())

    def get_delta(self, obj):
        return [rational_to_str(entry) for entry in obj.delta]

    def get_closed_form_roots(self, obj):
        if obj.closed_form_roots is None:
            return None
        rendered = []
        for item in obj.closed_form_roots:
            if isinstance(item, ExactQuadraticRoots):
                rendered.append({
                    'center': rational_to_str(item.center),
                    'coefficient': rational_to_str(item.coefficient),
                    'radicand': rational_to_str(item.radicand),
                    'text': str(item),
                })
            else:
                rendered.append(rational_to_str(item))
        return rendered

    def get_published_roots(self, obj):
        return [[repr(z.real), repr(z.imag)] for z in obj.published_roots]


class RunReportSerializer(serializers.Serializer):
    """
    One line of batch output.
    """
    seq = serializers.IntegerField()
    command = serializers.CharField()
    status = serializers.CharField()
    input = serializers.JSONField(source='descriptor')
    polynomial = serializers.SerializerMethodField()
    precision = serializers.IntegerField(allow_null=True)
    backend = serializers.CharField(allow_blank=True)
    roots = serializers.SerializerMethodField()
    checks = serializers.SerializerMethodField()
    results = serializers.JSONField()
    error = serializers.JSONField(allow_null=True)
    elapsed_seconds = serializers.FloatField()
    started = serializers.DateTimeField()
    version = serializers.CharField()

    def get_polynomial(self, obj):
        return format_polynomial(obj.polynomial) if obj.polynomial is not None else None

    def _child_context(self, obj):
        return dict(self.context, precision=obj.precision or 53)

    def get_roots(self, obj):
        if obj.root_set is None:
            return None
        return ComplexRootSerializer(obj.root_set.roots, many=True, context=self._child_context(obj)).data

    def get_checks(self, obj):
        return BoundCheckSerializer(obj.checks, many=True, context=self._child_context(obj)).data
