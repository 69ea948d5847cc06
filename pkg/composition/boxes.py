"""
Construção e classificação de caixas bipartidas e produtos de estados.
"""
from itertools import product

from django.core.exceptions import ValidationError
from django.utils.translation import gettext_lazy as _

from composition.models import BoxCorrelationLabel, NsBox
from composition.validators import box_position
from core.rationals import HALF, ONE, ZERO
from gpt.validators import validate_same_shape


def _validate_bit(name, value):
    if value not in (0, 1):
        raise ValidationError(
            _('%(name)s deve ser 0 ou 1 (recebido %(value)s).'),
            params={'name': name, 'value': value},
            code='invalid_bit'
        )


def box_from_label(alpha, beta, gamma, delta):
    """
    Estado puro bipartido com a₁ ⊕ a₂ = αx₁x₂ ⊕ βx₁ ⊕ γx₂ ⊕ δ.

    α = 1 dá uma caixa PR (marginais uniformes). Para α = 0 a correlação é
    local e o representante é a caixa determinística a₁ = βx₁ ⊕ δ, a₂ = γx₂.
    """
    for name, value in zip('αβγδ', (alpha, beta, gamma, delta)):
        _validate_bit(name, value)
    label = BoxCorrelationLabel.bipartite(alpha, beta, gamma, delta)
    table = [ZERO] * 16
    for x1, x2 in product((0, 1), repeat=2):
        parity = label(x1, x2)
        if alpha:
            for a1 in (0, 1):
                table[box_position(2, 2, (x1, x2), (a1, a1 ^ parity))] = HALF
        else:
            a1, a2 = (beta * x1) ^ delta, gamma * x2
            table[box_position(2, 2, (x1, x2), (a1, a2))] = ONE
    return NsBox(2, 2, 2, tuple(table))


def product_box(states):
    """P(a⃗ | x⃗) = Π_i P_i(a_i | x_i) para estados de um mesmo sistema"""
    states = list(states)
    shape = states[0].shape
    for state in states[1:]:
        validate_same_shape(shape, state.shape)
    if len(set(shape.arities)) != 1:
        raise ValidationError(
            _('Caixas exigem o mesmo número de resultados em todas as configurações.'),
            code='non_uniform_arity'
        )
    parties, settings, outcomes = len(states), shape.settings_count, shape.arities[0]
    table = []
    for joint_setting in product(range(settings), repeat=parties):
        for joint_outcome in product(range(outcomes), repeat=parties):
            value = ONE
            for state, x, a in zip(states, joint_setting, joint_outcome):
                value *= state.probability(x, a)
            table.append(value)
    return NsBox(parties, settings, outcomes, tuple(table))


def marginal(box, parties):
    """Caixa reduzida às partes `parties` (índices 0-based, em ordem)"""
    parties = tuple(parties)
    if not parties or len(set(parties)) != len(parties) or not all(
        0 <= p < box.parties for p in parties
    ):
        raise ValidationError(
            _('Conjunto de partes inválido: %(parties)s'),
            params={'parties': parties},
            code='invalid_parties'
        )
    table = []
    for joint_setting in product(range(box.settings), repeat=len(parties)):
        full_setting = [0] * box.parties
        for p, x in zip(parties, joint_setting):
            full_setting[p] = x
        sums = {}
        for joint_outcome in box.joint_outcomes:
            key = tuple(joint_outcome[p] for p in parties)
            sums[key] = sums.get(key, ZERO) + box.probability(tuple(full_setting), joint_outcome)
        for key in product(range(box.outcomes), repeat=len(parties)):
            table.append(sums[key])
    return NsBox(len(parties), box.settings, box.outcomes, tuple(table))


def correlation_label(box):
    """Rótulo (α, β, γ, δ) de uma caixa bipartida binária de paridade determinística"""
    if box.parties != 2 or box.settings != 2 or box.outcomes != 2:
        return None
    if not box.parity_is_deterministic:
        return None
    function = []
    for joint_setting in box.joint_settings:
        odd = sum(
            (box.probability(joint_setting, a) for a in box.joint_outcomes if sum(a) % 2),
            ZERO
        )
        function.append(int(odd))
    return BoxCorrelationLabel(tuple(function))


def chsh_value(box):
    """Σ_{x,y} (−1)^{xy} E(x, y) com E(x, y) = Σ_{a,b} (−1)^{a⊕b} P(ab|xy)"""
    if box.parties != 2 or box.settings != 2 or box.outcomes != 2:
        raise ValidationError(
            _('CHSH exige uma caixa bipartida com 2 configurações e 2 resultados.'),
            code='invalid_box_shape'
        )
    total = ZERO
    for x, y in box.joint_settings:
        correlator = sum(
            ((-1) ** (a ^ b) * box.probability((x, y), (a, b)) for a, b in box.joint_outcomes),
            ZERO
        )
        total += (-1) ** (x * y) * correlator
    return total
