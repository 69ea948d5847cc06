from rest_framework.serializers import (
    BooleanField,
    CharField,
    FloatField,
    IntegerField,
    Serializer,
)

from core.serializers import BitStringField, RationalField


class LedgerEntrySerializer(Serializer):
    step = IntegerField()
    operation = CharField()
    cost_bits = RationalField()
    detail = CharField()


class ReadbackSerializer(Serializer):
    k = IntegerField()
    value = IntegerField()
    expected = IntegerField()
    matches = BooleanField()


class DemonReportSerializer(Serializer):
    D = IntegerField(source='dimension')
    decisions = BitStringField()
    stored_bits = IntegerField()
    total_cost_bits = RationalField()
    landauer_bound_bits = RationalField()
    deficit_bits = RationalField()
    final_zeta = BitStringField()
    readback = ReadbackSerializer(allow_null=True)
    temperature = FloatField(allow_null=True)
    energy_joules = FloatField(allow_null=True)
    landauer_joules = FloatField(allow_null=True)
    ledger = LedgerEntrySerializer(source='entries', many=True)


class ErasureSerializer(Serializer):
    D = IntegerField(source='dimension')
    initial_zeta = BitStringField()
    final_zeta = BitStringField()
    total_cost_bits = RationalField()
    ledger = LedgerEntrySerializer(source='entries', many=True)
