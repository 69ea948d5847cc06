from rest_framework.serializers import (
    BooleanField,
    CharField,
    FloatField,
    IntegerField,
    ListField,
    Serializer,
    SerializerMethodField,
)

from core.serializers import BitStringField, RationalField


class TranscriptStepSerializer(Serializer):
    actor = CharField()
    action = CharField()
    detail = CharField()


class TranscriptSerializer(Serializer):
    zeta = BitStringField()
    k = IntegerField()
    outcome = IntegerField()
    message_bits = ListField(child=IntegerField())
    steps = TranscriptStepSerializer(many=True)
    replayed_outcome = SerializerMethodField()

    def get_replayed_outcome(self, transcript):
        return transcript.replay()


class IcReportSerializer(Serializer):
    n = IntegerField()
    carrier = CharField()
    per_index = ListField(child=FloatField())
    total = FloatField()
    capacity = FloatField()
    measurement_dimension = IntegerField()
    violated = BooleanField()
    verdict = SerializerMethodField()

    def get_verdict(self, report):
        return 'information causality violated' if report.violated else 'information causality satisfied'


class CcReportSerializer(Serializer):
    function = CharField()
    n_alice_bits = IntegerField()
    n_bob_bits = IntegerField()
    hypercube_dimension = IntegerField()
    pairs_checked = IntegerField()
    correct = IntegerField()
    correct_fraction = RationalField()
    communication_bits = FloatField()


class PrBoxSimulationSerializer(Serializer):
    zeta = BitStringField()
    k = SerializerMethodField()
    distribution = ListField(child=RationalField())
    point_mass = BooleanField(source='is_point_mass')
    output = IntegerField(allow_null=True)
    assignments = IntegerField()
    boxes_used = IntegerField()
    message_bits = IntegerField()

    def get_k(self, simulation):
        return simulation.setting + 1
