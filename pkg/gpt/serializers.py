"""
Formato de arquivo de sistema (JSON UTF-8):

    {
      "name": "gbit",
      "measurements": [{"outcomes": 2}, {"outcomes": 2}],
      "vertices": [["1", "0", "1", "0"], ...]
    }

Cada vértice é a tabela achatada, configuração mais externa e resultado
mais interno, com racionais "p/q" ou inteiros.
"""
from django.core.exceptions import ValidationError as DjangoValidationError
from rest_framework.exceptions import ValidationError
from rest_framework.serializers import CharField, IntegerField, ListField, Serializer

from core.serializers import RationalField, parse_json, raise_django_errors, read_text
from core.utils import canonical_json, digest
from gpt.models import GptSystem, State, SystemShape
from lp.polytope import check_extremality


class MeasurementSpecSerializer(Serializer):
    outcomes = IntegerField(min_value=2)


class SystemFileSerializer(Serializer):
    name = CharField(allow_blank=True, required=False, default='')
    measurements = MeasurementSpecSerializer(many=True, allow_empty=False)
    vertices = ListField(
        child=ListField(child=RationalField(), allow_empty=False),
        allow_empty=False
    )

    def validate(self, attrs):
        shape = SystemShape(tuple(spec['outcomes'] for spec in attrs['measurements']))
        vertices = []
        for position, table in enumerate(attrs['vertices']):
            try:
                vertices.append(State(shape, tuple(table)))
            except DjangoValidationError as exc:
                raise ValidationError({'vertices': [f'vértice {position}: {exc.messages[0]}']})
        try:
            system = GptSystem(shape, vertices, name=attrs.get('name', ''))
            check_extremality(system)
        except DjangoValidationError as exc:
            raise ValidationError({'vertices': exc.messages})
        attrs['system'] = system
        return attrs


def system_to_file(system):
    return SystemFileSerializer({
        'name': system.name,
        'measurements': [{'outcomes': arity} for arity in system.shape.arities],
        'vertices': [list(vertex.table) for vertex in system.vertices],
    }).data


def system_from_file(data):
    return raise_django_errors(SystemFileSerializer(data=data))['system']


def load_system(path):
    return system_from_file(parse_json(read_text(path), source=str(path)))


def dump_system(system):
    return canonical_json(system_to_file(system))


def system_digest(system):
    """sha256 do arquivo canônico do sistema"""
    return digest(system_to_file(system))


class EffectSerializer(Serializer):
    coefficients = ListField(child=RationalField())
    offset = RationalField()


class MeasurementSerializer(Serializer):
    effects = EffectSerializer(many=True)
