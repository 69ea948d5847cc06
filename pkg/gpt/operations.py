"""
Operações sobre estados, efeitos e medições de um sistema GPT.

Todas são funções puras sobre tipos imutáveis. A validade de efeitos e
medições é decidida nos vértices: por convexidade isso cobre todo Ω.
"""
from django.core.exceptions import ValidationError
from django.utils.translation import gettext_lazy as _

from core.rationals import ONE, ZERO, Rational
from gpt.models import Effect, Measurement, PureStateLabel, State
from gpt.validators import validate_index, validate_same_shape, validate_weights


def atomic_effect(shape, setting, outcome):
    """e(ω) = P(outcome | setting)"""
    position = shape.index(setting, outcome)
    coefficients = [ZERO] * shape.table_length
    coefficients[position] = ONE
    return Effect(shape, tuple(coefficients), ZERO)


def unit_effect(shape):
    return Effect.unit(shape)


def setting_measurement(shape, setting):
    """A medição pura da configuração x: {atomic(x, a)} para todo a"""
    validate_index(setting, shape.settings_count, 'setting')
    return Measurement(tuple(
        atomic_effect(shape, setting, outcome)
        for outcome in range(shape.arities[setting])
    ))


def evaluate(effect, state):
    return effect(state)


def is_valid_effect(effect, system):
    validate_same_shape(system.shape, effect.shape)
    return all(ZERO <= effect(vertex) <= ONE for vertex in system.vertices)


def is_valid_measurement(measurement, system):
    validate_same_shape(system.shape, measurement.shape)
    if not all(is_valid_effect(effect, system) for effect in measurement.effects):
        return False
    return all(
        sum(measurement.probabilities(vertex), ZERO) == ONE
        for vertex in system.vertices
    )


def mix(states, weights):
    """Combinação convexa entrada a entrada"""
    states = list(states)
    weights = [Rational(weight) for weight in weights]
    validate_weights(weights, len(states))
    shape = states[0].shape
    for state in states[1:]:
        validate_same_shape(shape, state.shape)
    table = [ZERO] * shape.table_length
    for state, weight in zip(states, weights):
        if weight:
            for position, value in enumerate(state.table):
                table[position] += weight * value
    return State(shape, tuple(table))


def maximally_mixed(system):
    count = system.vertex_count
    return mix(system.vertices, [Rational(1, count)] * count)


def measure(state, setting):
    """Distribuição exata dos resultados da configuração `setting`"""
    return setting_measurement(state.shape, setting).probabilities(state)


def label_of(state):
    """Rótulo {ζ_x} de um estado determinístico, ou None se misto"""
    if not state.is_deterministic:
        return None
    return PureStateLabel(state.outcomes)


def vertex_of_label(system, label):
    """Índice do vértice com o rótulo dado"""
    label = label if isinstance(label, PureStateLabel) else PureStateLabel(tuple(label))
    state = label.to_state(system.shape)
    try:
        return system.vertex_index(state)
    except ValueError:
        raise ValidationError(
            _('O rótulo %(label)s não é vértice de %(system)s.'),
            params={'label': label, 'system': system},
            code='unknown_vertex'
        ) from None


def state_sort_key(state):
    """Ordem canônica: determinísticos pelo rótulo, depois mistos pela tabela"""
    if state.is_deterministic:
        return (0, state.outcomes)
    return (1, tuple(-value for value in state.table))
