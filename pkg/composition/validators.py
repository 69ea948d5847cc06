from itertools import product

from django.core.exceptions import ValidationError
from django.utils.translation import gettext_lazy as _

from core.rationals import ONE, ZERO


def box_position(settings, outcomes, joint_setting, joint_outcome):
    """Posição na tabela: configuração conjunta por fora, resultado conjunto por dentro"""
    x_index = 0
    for x in joint_setting:
        x_index = x_index * settings + x
    a_index = 0
    for a in joint_outcome:
        a_index = a_index * outcomes + a
    return x_index * outcomes ** len(joint_outcome) + a_index


def normalization_rows(parties, settings, outcomes):
    width = (settings * outcomes) ** parties
    rows = []
    for joint_setting in product(range(settings), repeat=parties):
        row = [ZERO] * width
        for joint_outcome in product(range(outcomes), repeat=parties):
            row[box_position(settings, outcomes, joint_setting, joint_outcome)] = ONE
        rows.append((tuple(row), ONE))
    return rows


def no_signaling_rows(parties, settings, outcomes):
    """
    Para cada parte p: a marginal dos demais, somada sobre a_p, não depende
    de x_p. Comparamos cada x_p >= 1 com x_p = 0.
    """
    width = (settings * outcomes) ** parties
    rows = []
    for party in range(parties):
        for joint_setting in product(range(settings), repeat=parties):
            if joint_setting[party] == 0:
                continue
            reference = joint_setting[:party] + (0,) + joint_setting[party + 1:]
            for rest in product(range(outcomes), repeat=parties - 1):
                row = [ZERO] * width
                for a in range(outcomes):
                    joint_outcome = rest[:party] + (a,) + rest[party:]
                    row[box_position(settings, outcomes, joint_setting, joint_outcome)] += ONE
                    row[box_position(settings, outcomes, reference, joint_outcome)] -= ONE
                rows.append((tuple(row), ZERO))
    return rows


def validate_box_table(parties, settings, outcomes, table):
    if parties < 1 or settings < 1 or outcomes < 2:
        raise ValidationError(
            _('Caixa inválida: %(parties)s partes, %(settings)s configurações, %(outcomes)s resultados.'),
            params={'parties': parties, 'settings': settings, 'outcomes': outcomes},
            code='invalid_box_shape'
        )
    expected = (settings * outcomes) ** parties
    if len(table) != expected:
        raise ValidationError(
            _('Tabela da caixa com %(length)s entradas; esperado %(expected)s.'),
            params={'length': len(table), 'expected': expected},
            code='table_length'
        )
    if any(value < ZERO for value in table):
        raise ValidationError(_('A caixa tem probabilidades negativas.'), code='not_a_probability')
    for row, rhs in normalization_rows(parties, settings, outcomes):
        if sum((c * v for c, v in zip(row, table) if c), ZERO) != rhs:
            raise ValidationError(
                _('A caixa não é normalizada em alguma configuração conjunta.'),
                code='not_normalized'
            )
    for row, rhs in no_signaling_rows(parties, settings, outcomes):
        if sum((c * v for c, v in zip(row, table) if c), ZERO) != rhs:
            raise ValidationError(
                _('A caixa sinaliza: uma marginal depende da configuração remota.'),
                code='signaling'
            )
