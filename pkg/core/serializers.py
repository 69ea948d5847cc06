import json
from pathlib import Path

from django.core.exceptions import ValidationError as DjangoValidationError
from django.utils.translation import gettext_lazy as _
from rest_framework.exceptions import ValidationError
from rest_framework.fields import Field

from core.rationals import format_rational, parse_rational


class RationalField(Field):
    """
    Racional exato no formato "p/q" (ou inteiro).

    Aceita também inteiros JSON; sempre devolve a forma canônica em string.
    """
    default_error_messages = {
        'invalid': _('Racional inválido: use "p/q" ou um inteiro.'),
    }

    def to_internal_value(self, data):
        try:
            return parse_rational(data)
        except DjangoValidationError:
            self.fail('invalid')

    def to_representation(self, value):
        return format_rational(value)


class BitStringField(Field):
    """Cadeia de bits escrita como texto, ex: "10110" -> (1, 0, 1, 1, 0)"""
    default_error_messages = {
        'invalid': _('Cadeia de bits inválida: use apenas os caracteres 0 e 1.'),
        'empty': _('A cadeia de bits não pode ser vazia.'),
    }

    def to_internal_value(self, data):
        if not isinstance(data, str):
            self.fail('invalid')
        if not data:
            self.fail('empty')
        if set(data) - {'0', '1'}:
            self.fail('invalid')
        return tuple(int(ch) for ch in data)

    def to_representation(self, value):
        return ''.join(str(bit) for bit in value)


def raise_django_errors(serializer):
    """
    Converte erros de um Serializer do DRF em ValidationError do Django,
    que é o que os serviços e os comandos tratam.
    """
    try:
        serializer.is_valid(raise_exception=True)
    except ValidationError as exc:
        raise DjangoValidationError(_flatten(exc.detail)) from exc
    return serializer.validated_data


def _flatten(detail, prefix=''):
    if isinstance(detail, dict):
        errors = {}
        for key, value in detail.items():
            path = f'{prefix}.{key}' if prefix else str(key)
            errors.update(_flatten(value, path))
        return errors
    if isinstance(detail, list):
        if all(not isinstance(item, (dict, list)) for item in detail):
            return {prefix or 'non_field_errors': [str(item) for item in detail]}
        errors = {}
        for index, item in enumerate(detail):
            if item:
                errors.update(_flatten(item, f'{prefix}[{index}]'))
        return errors
    return {prefix or 'non_field_errors': [str(detail)]}


def parse_json(text, source='<entrada>'):
    """JSON UTF-8 com erro de sintaxe apontando linha e coluna"""
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise DjangoValidationError(
            _('%(source)s: JSON inválido na linha %(line)s, coluna %(column)s: %(reason)s'),
            params={'source': source, 'line': exc.lineno, 'column': exc.colno, 'reason': exc.msg},
            code='parse_error'
        ) from exc


def read_text(path):
    try:
        return Path(path).read_text(encoding='utf-8')
    except (OSError, UnicodeDecodeError) as exc:
        raise DjangoValidationError(
            _('Não foi possível ler %(path)s: %(reason)s'),
            params={'path': path, 'reason': exc},
            code='unreadable_file'
        ) from exc
