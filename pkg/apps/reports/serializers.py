import math

from rest_framework import serializers

from apps.entanglement.witness import WitnessVerdict
from apps.squeezing.config import MinimizerConfig
from apps.squeezing.engine import SqueezingReport
from core.utils import Undefined

from .types import RESOLUTION_CHOICES, ReportDocument, SweepRow


class MaybeFloatField(serializers.Field):
    """A float, or an Undefined marker written as {"undefined": reason}."""

    default_error_messages = {
        'invalid': 'Expected a finite number or {"undefined": "<reason>"}.',
    }

    def to_representation(self, value):
        if isinstance(value, Undefined):
            return value.as_dict()
        return float(value)

    def to_internal_value(self, data):
        if isinstance(data, dict):
            if set(data) != {'undefined'} or not isinstance(data['undefined'], str):
                self.fail('invalid')
            return Undefined(data['undefined'])
        if isinstance(data, bool):
            self.fail('invalid')
        try:
            value = float(data)
        except (TypeError, ValueError):
            self.fail('invalid')
        if not math.isfinite(value):
            self.fail('invalid')
        return value


class SqueezingReportSerializer(serializers.Serializer):
    """Serializer for SqueezingReport."""

    n_qubits = serializers.IntegerField(min_value=1)
    xi_tilde_1 = serializers.FloatField(min_value=0.0)
    xi_tilde_2 = MaybeFloatField()
    theta_opt = serializers.ListField(child=serializers.FloatField())
    var_min = serializers.FloatField(min_value=0.0)
    j0 = serializers.FloatField(min_value=0.0)
    xi_1 = MaybeFloatField()
    xi_2 = MaybeFloatField()
    collective_mean_spin_len = serializers.FloatField(min_value=0.0)
    converged = serializers.BooleanField()
    restarts = serializers.IntegerField(min_value=1)

    def validate(self, attrs):
        if len(attrs['theta_opt']) != attrs['n_qubits']:
            raise serializers.ValidationError({'theta_opt': "Expected one angle per qubit."})
        return attrs

    def create(self, validated_data):
        return SqueezingReport(**{**validated_data, 'theta_opt': tuple(validated_data['theta_opt'])})


class WitnessVerdictSerializer(serializers.Serializer):
    """Serializer for WitnessVerdict."""

    xi_tilde_2 = MaybeFloatField()
    entangled_certified = serializers.BooleanField()
    note = serializers.CharField(allow_blank=True, trim_whitespace=False)

    def create(self, validated_data):
        return WitnessVerdict(**validated_data)


class MinimizerConfigSerializer(serializers.Serializer):
    """Echo of the minimizer settings; the worker count never changes results and is left out."""

    n_restarts = serializers.IntegerField(min_value=1)
    max_sweeps = serializers.IntegerField(min_value=1)
    convergence_tol = serializers.FloatField()
    seed = serializers.IntegerField(min_value=0)
    large_n_restarts = serializers.IntegerField(min_value=1)
    large_n_threshold = serializers.IntegerField(min_value=1)

    def create(self, validated_data):
        return MinimizerConfig(**validated_data)


class ReportDocumentSerializer(serializers.Serializer):
    """Serializer for the top-level report document."""

    schema_version = serializers.CharField()
    input_digest = serializers.CharField(allow_blank=True)
    report = SqueezingReportSerializer()
    verdict = WitnessVerdictSerializer(required=False)
    config_echo = MinimizerConfigSerializer()
    timing_ms = serializers.FloatField(required=False, min_value=0.0)

    OPTIONAL_FIELDS = ('verdict', 'timing_ms')

    def to_representation(self, instance):
        data = super().to_representation(instance)
        for name in self.OPTIONAL_FIELDS:
            if data.get(name) is None:
                data.pop(name, None)
        return data

    def create(self, validated_data):
        verdict = validated_data.get('verdict')
        return ReportDocument(
            schema_version=validated_data['schema_version'],
            input_digest=validated_data['input_digest'],
            report=SqueezingReportSerializer().create(validated_data['report']),
            config_echo=MinimizerConfigSerializer().create(validated_data['config_echo']),
            verdict=WitnessVerdictSerializer().create(verdict) if verdict is not None else None,
            timing_ms=validated_data.get('timing_ms'),
        )


class SweepRowSerializer(serializers.Serializer):
    """Serializer for one row of a parameter sweep."""

    param = serializers.FloatField()
    xi_1 = MaybeFloatField()
    xi_2 = MaybeFloatField()
    xi_tilde_1 = MaybeFloatField()
    xi_tilde_2 = MaybeFloatField()
    concurrence = MaybeFloatField()
    j0 = serializers.FloatField()
    resolution = serializers.ChoiceField(choices=RESOLUTION_CHOICES)

    def create(self, validated_data):
        return SweepRow(**validated_data)
