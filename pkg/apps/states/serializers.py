from django.conf import settings
from rest_framework import serializers

from .factory import FAMILY_CHOICES
from .quantum import KIND_CHOICES, MIXED, PURE


class AmplitudeField(serializers.ListField):
    """One complex amplitude written as [re, im]."""

    child = serializers.FloatField()

    def __init__(self, **kwargs):
        kwargs.setdefault('min_length', 2)
        kwargs.setdefault('max_length', 2)
        super().__init__(**kwargs)


class MixtureTermSerializer(serializers.Serializer):
    """Serializer for one pure component of a mixture."""

    weight = serializers.FloatField()
    amplitudes = serializers.ListField(child=AmplitudeField(), allow_empty=False)


class FamilyProvenanceSerializer(serializers.Serializer):
    """Serializer for the optional family the state was built from."""

    family = serializers.ChoiceField(choices=FAMILY_CHOICES)
    params = serializers.DictField(child=serializers.FloatField(), required=False, default=dict)


class StateFileSerializer(serializers.Serializer):
    """Serializer for the JSON state file format."""

    n_qubits = serializers.IntegerField(min_value=1)
    kind = serializers.ChoiceField(choices=KIND_CHOICES)
    amplitudes = serializers.ListField(child=AmplitudeField(), required=False, allow_empty=False)
    terms = MixtureTermSerializer(many=True, required=False, allow_empty=False)
    family = FamilyProvenanceSerializer(required=False)

    def validate_n_qubits(self, value):
        """Enforce the qubit cap."""
        cap = settings.SQUEEZING['MAX_QUBITS']
        if value > cap:
            raise serializers.ValidationError(f"At most {cap} qubits are supported.")
        return value

    def validate(self, attrs):
        """Check that the payload matches its kind and dimension."""
        dim = 2 ** attrs['n_qubits']
        if attrs['kind'] == PURE:
            if 'amplitudes' not in attrs or 'terms' in attrs:
                raise serializers.ValidationError("A pure state needs 'amplitudes' and no 'terms'.")
            if len(attrs['amplitudes']) != dim:
                raise serializers.ValidationError(
                    {'amplitudes': f"Expected {dim} amplitudes, got {len(attrs['amplitudes'])}."}
                )
        elif attrs['kind'] == MIXED:
            if 'terms' not in attrs or 'amplitudes' in attrs:
                raise serializers.ValidationError("A mixed state needs 'terms' and no 'amplitudes'.")
            for index, term in enumerate(attrs['terms']):
                if len(term['amplitudes']) != dim:
                    raise serializers.ValidationError(
                        {'terms': f"Term {index}: expected {dim} amplitudes, got {len(term['amplitudes'])}."}
                    )
        return attrs
