from rest_framework import serializers

from batches.backends import Backend
from batches.engine import EngineConfig
from batches.exceptions import InvalidEngineConfigError
from keccak.exceptions import UnknownVariantError
from keccak.functions import get_variant

from .exceptions import WorkloadError
from .reports import BenchmarkRecord
from .workloads import DEFAULT_MESSAGE_SIZE, DEFAULT_SIZES, WorkloadSpec

BACKEND_ALIASES = {
    'seq': Backend.SEQUENTIAL.value,
    'sequential': Backend.SEQUENTIAL.value,
    'par': Backend.PARALLEL.value,
    'parallel': Backend.PARALLEL.value,
}


class SizesField(serializers.ListField):
    """A list of byte totals, also accepted as '1202,4652'."""

    def to_internal_value(self, data):
        if isinstance(data, str):
            data = [part.strip() for part in data.split(',') if part.strip()]
        return super().to_internal_value(data)


class VariantField(serializers.CharField):
    """Accepts any spelling get_variant understands and returns the FunctionVariant."""

    def to_internal_value(self, data):
        name = super().to_internal_value(data)
        try:
            return get_variant(name)
        except UnknownVariantError as e:
            raise serializers.ValidationError(str(e))


class BackendField(serializers.CharField):
    def to_internal_value(self, data):
        name = super().to_internal_value(data).strip().lower()
        if name not in BACKEND_ALIASES:
            raise serializers.ValidationError(
                f"Unknown backend {data!r}; expected seq, par, sequential or parallel"
            )
        return Backend(BACKEND_ALIASES[name])


class EngineConfigSerializer(serializers.Serializer):
    """Validates engine options coming from the command line or environment."""
    backend = BackendField(required=False)
    worker_count = serializers.IntegerField(required=False, allow_null=True, min_value=1)
    chunk_size = serializers.IntegerField(required=False, allow_null=True, min_value=1)

    def create(self, validated_data):
        try:
            return EngineConfig.from_settings(**validated_data)
        except InvalidEngineConfigError as e:
            raise serializers.ValidationError(str(e))


class WorkloadSpecSerializer(serializers.Serializer):
    """Validates the workload half of ``bench`` options."""
    message_size = serializers.IntegerField(min_value=1, default=DEFAULT_MESSAGE_SIZE)
    sizes = SizesField(
        child=serializers.IntegerField(min_value=1),
        allow_empty=False,
        default=list(DEFAULT_SIZES),
    )
    variant = VariantField(default='sha3-256')
    seed = serializers.IntegerField(min_value=0, default=2019)
    output_bits = serializers.IntegerField(min_value=1, required=False, allow_null=True)

    def validate(self, attrs):
        message_size = attrs.get('message_size', DEFAULT_MESSAGE_SIZE)
        too_small = [total for total in attrs.get('sizes', ()) if total < message_size]
        if too_small:
            raise serializers.ValidationError({
                'sizes': f"Sizes {too_small} are smaller than one {message_size}-byte message"
            })
        return attrs

    def create(self, validated_data):
        try:
            return WorkloadSpec(
                message_size=validated_data['message_size'],
                sizes=tuple(validated_data['sizes']),
                variant=validated_data['variant'],
                seed=validated_data['seed'],
                output_bits=validated_data.get('output_bits'),
            )
        except WorkloadError as e:
            raise serializers.ValidationError(str(e))


class BenchmarkRecordSerializer(serializers.Serializer):
    """One CSV report row."""
    total_bytes = serializers.IntegerField(min_value=0)
    message_size = serializers.IntegerField(min_value=1)
    message_count = serializers.IntegerField(min_value=0)
    backend = BackendField()
    time_seconds = serializers.FloatField(min_value=0)
    throughput_bps = serializers.FloatField(min_value=0)
    repeats = serializers.IntegerField(min_value=3)

    def create(self, validated_data):
        return BenchmarkRecord(**validated_data)
