from rest_framework.serializers import (
    BooleanField,
    CharField,
    IntegerField,
    ListField,
    Serializer,
    SerializerMethodField,
)

from gpt.serializers import MeasurementSerializer


class LevelStatsSerializer(Serializer):
    size = IntegerField()
    orbits = IntegerField()
    lps_solved = IntegerField()
    feasible = IntegerField()


class DimensionReportSerializer(Serializer):
    system = CharField(source='system_name')
    digest = CharField()
    vertex_count = IntegerField()
    d_m = IntegerField()
    d_i = IntegerField()
    d_m_exact = BooleanField()
    d_m_bound = SerializerMethodField()
    dimension_mismatch = BooleanField(source='has_mismatch')
    d_m_witness = SerializerMethodField()
    d_i_witness = ListField(source='d_i_clique', child=IntegerField())
    certify_limit = IntegerField()
    edge_count = IntegerField()
    symmetry_group_order = IntegerField()
    levels = LevelStatsSerializer(many=True)

    def get_d_m_bound(self, obj):
        return 'exact' if obj.d_m_exact else 'lower_bound'

    def get_d_m_witness(self, obj):
        return {
            'states': list(obj.d_m_states),
            'measurement': MeasurementSerializer(obj.d_m_measurement).data,
        }
