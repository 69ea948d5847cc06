from django.core.exceptions import ValidationError
from django.utils.translation import gettext_lazy as _

from core.rationals import ONE, ZERO


def validate_arities(arities):
    """
    Cada configuração de medição precisa de pelo menos 2 resultados,
    e o sistema precisa de pelo menos uma configuração.
    """
    if not arities:
        raise ValidationError(
            _('O sistema precisa de pelo menos uma configuração de medição.'),
            code='no_settings'
        )
    for setting, arity in enumerate(arities):
        if not isinstance(arity, int) or isinstance(arity, bool) or arity < 2:
            raise ValidationError(
                _('A configuração %(setting)s tem %(arity)s resultados; o mínimo é 2.'),
                params={'setting': setting, 'arity': arity},
                code='invalid_arity'
            )


def validate_table(shape, table):
    """
    Valida uma tabela P(a|x): tamanho, entradas em [0, 1] e normalização
    exata por configuração.
    """
    if len(table) != shape.table_length:
        raise ValidationError(
            _('Tabela com %(length)s entradas; o formato %(shape)s exige %(expected)s.'),
            params={'length': len(table), 'shape': shape, 'expected': shape.table_length},
            code='table_length'
        )
    for position, value in enumerate(table):
        if value < ZERO or value > ONE:
            raise ValidationError(
                _('Entrada %(position)s = %(value)s fora do intervalo [0, 1].'),
                params={'position': position, 'value': value},
                code='not_a_probability'
            )
    for setting in range(shape.settings_count):
        total = sum(shape.block(table, setting), ZERO)
        if total != ONE:
            raise ValidationError(
                _('As probabilidades da configuração %(setting)s somam %(total)s, não 1.'),
                params={'setting': setting, 'total': total},
                code='not_normalized'
            )


def validate_same_shape(expected, actual):
    if expected != actual:
        raise ValidationError(
            _('Formatos incompatíveis: %(expected)s e %(actual)s.'),
            params={'expected': expected, 'actual': actual},
            code='shape_mismatch'
        )


def validate_index(value, upper, name):
    """Índice 0-based em [0, upper)"""
    if not isinstance(value, int) or isinstance(value, bool) or not 0 <= value < upper:
        raise ValidationError(
            _('%(name)s = %(value)s fora do intervalo [0, %(upper)s).'),
            params={'name': name, 'value': value, 'upper': upper},
            code='invalid_index'
        )


def validate_weights(weights, count):
    if len(weights) != count:
        raise ValidationError(
            _('Foram dados %(weights)s pesos para %(count)s estados.'),
            params={'weights': len(weights), 'count': count},
            code='weights_length'
        )
    if any(weight < ZERO for weight in weights):
        raise ValidationError(
            _('Pesos de mistura devem ser não negativos.'),
            code='negative_weight'
        )
    total = sum(weights, ZERO)
    if total != ONE:
        raise ValidationError(
            _('Os pesos somam %(total)s, não 1.'),
            params={'total': total},
            code='weights_not_normalized'
        )


def validate_distinct_vertices(vertices):
    seen = {}
    for position, vertex in enumerate(vertices):
        if vertex in seen:
            raise ValidationError(
                _('Os vértices %(first)s e %(second)s são iguais.'),
                params={'first': seen[vertex], 'second': position},
                code='duplicate_vertex'
            )
        seen[vertex] = position
