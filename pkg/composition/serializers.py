"""
Arquivo de caixas (JSON UTF-8), no mesmo estilo do arquivo de sistema:

    {"parties": 2, "settings": 2, "outcomes": 2,
     "boxes": [{"table": ["1/2", "0", ...]}, ...]}

Na exportação cada caixa leva também `kind`, `label` e `chsh`.
"""
from django.core.exceptions import ValidationError as DjangoValidationError
from rest_framework.exceptions import ValidationError
from rest_framework.serializers import IntegerField, ListField, Serializer, SerializerMethodField

from composition.boxes import chsh_value, correlation_label
from composition.models import NsBox
from core.rationals import format_rational
from core.serializers import RationalField, parse_json, raise_django_errors, read_text


class BoxSerializer(Serializer):
    table = ListField(child=RationalField(), allow_empty=False)
    kind = SerializerMethodField()
    label = SerializerMethodField()
    chsh = SerializerMethodField()

    def get_kind(self, box):
        return box.kind.value

    def get_label(self, box):
        label = correlation_label(box)
        return str(label) if label is not None else None

    def get_chsh(self, box):
        if box.parties == 2 and box.settings == 2 and box.outcomes == 2:
            return format_rational(chsh_value(box))
        return None


class BoxFileSerializer(Serializer):
    parties = IntegerField(min_value=1)
    settings = IntegerField(min_value=1)
    outcomes = IntegerField(min_value=2)
    boxes = BoxSerializer(many=True, allow_empty=False)

    def validate(self, attrs):
        boxes = []
        for position, entry in enumerate(attrs['boxes']):
            try:
                boxes.append(NsBox(
                    attrs['parties'], attrs['settings'], attrs['outcomes'], tuple(entry['table'])
                ))
            except DjangoValidationError as exc:
                raise ValidationError({'boxes': [f'caixa {position}: {exc.messages[0]}']})
        attrs['boxes'] = boxes
        return attrs


def boxes_to_file(boxes):
    first = boxes[0]
    return BoxFileSerializer({
        'parties': first.parties,
        'settings': first.settings,
        'outcomes': first.outcomes,
        'boxes': boxes,
    }).data


def load_boxes(path):
    data = parse_json(read_text(path), source=str(path))
    return raise_django_errors(BoxFileSerializer(data=data))['boxes']
