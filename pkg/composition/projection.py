"""
Projeção de paridade (a₁, …, a_k) → a₁ ⊕ … ⊕ a_k e amplificação direta
para k g-bits.
"""
from itertools import product

from django.conf import settings
from django.core.exceptions import ValidationError
from django.utils.translation import gettext_lazy as _

from core.exceptions import ResourceCapExceeded
from core.rationals import ONE, ZERO
from gpt.choices import SystemKind
from gpt.models import GptSystem, State, SystemShape
from gpt.operations import state_sort_key


def parity_project(box):
    """
    Estado de um sistema com settings^k configurações binárias, uma por
    configuração conjunta (parte 1 mais significativa).
    """
    if box.outcomes != 2:
        raise ValidationError(
            _('A projeção de paridade exige resultados binários (recebido %(outcomes)s).'),
            params={'outcomes': box.outcomes},
            code='non_binary_box'
        )
    table = []
    for joint_setting in box.joint_settings:
        odd = sum(
            (box.probability(joint_setting, a) for a in box.joint_outcomes if sum(a) % 2),
            ZERO
        )
        table.extend((ONE - odd, odd))
    return State(SystemShape.binary(len(box.joint_settings)), tuple(table))


def project_system(boxes, name=None):
    """Projeções distintas das caixas, em ordem canônica"""
    states = sorted({parity_project(box) for box in boxes}, key=state_sort_key)
    name = name or f'{SystemKind.PROJECTED.value}({len(states)})'
    return GptSystem(states[0].shape, states, name=name)


def amplify(k, cap=None):
    """
    Sistema projetado de k g-bits construído direto: um vértice
    determinístico por função booleana f sobre {0,1}^k, em 2^k configurações.
    """
    if not isinstance(k, int) or k < 1:
        raise ValidationError(
            _('amplify exige k >= 1 (recebido %(value)s).'),
            params={'value': k},
            code='invalid_dimension'
        )
    cap = settings.GPT_LIMITS['AMPLIFY_VERTEX_CAP'] if cap is None else cap
    dimension = 2 ** k
    # 2^dimension > cap, sem materializar a potência para k grande
    if dimension >= cap.bit_length():
        raise ResourceCapExceeded(_('Vértices de amplify(%(k)s)') % {'k': k}, f'2^{dimension}', cap)
    shape = SystemShape.binary(dimension)
    vertices = [
        State.deterministic(shape, function)
        for function in product((0, 1), repeat=dimension)
    ]
    return GptSystem(shape, vertices, name=f'{SystemKind.AMPLIFIED.value}(k={k})')
