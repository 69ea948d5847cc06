"""
Tipos de domínio de um sistema GPT isolado.

Nada aqui é persistido: são dataclasses imutáveis, seguras para uso
concorrente. Estados são tabelas completas P(a|x), com a configuração x
como índice mais externo e o resultado a como índice interno.
"""
from dataclasses import dataclass
from functools import cached_property
from itertools import accumulate

from django.core.exceptions import ValidationError
from django.utils.translation import gettext_lazy as _

from core.rationals import ONE, ZERO, Rational, as_rationals, dot
from gpt.validators import (
    validate_arities,
    validate_distinct_vertices,
    validate_index,
    validate_same_shape,
    validate_table,
)


@dataclass(frozen=True)
class SystemShape:
    """
    Aridades das configurações de medição: arities[x] = número de
    resultados da configuração x.
    """
    arities: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, 'arities', tuple(self.arities))
        validate_arities(self.arities)

    @classmethod
    def binary(cls, settings_count):
        return cls((2,) * settings_count)

    @property
    def settings_count(self):
        return len(self.arities)

    @cached_property
    def offsets(self):
        return (0, *accumulate(self.arities))[:-1]

    @property
    def table_length(self):
        return sum(self.arities)

    @property
    def is_binary(self):
        return all(arity == 2 for arity in self.arities)

    def index(self, setting, outcome):
        validate_index(setting, self.settings_count, 'setting')
        validate_index(outcome, self.arities[setting], 'outcome')
        return self.offsets[setting] + outcome

    def block(self, table, setting):
        start = self.offsets[setting]
        return table[start:start + self.arities[setting]]

    def __str__(self):
        return 'x'.join(str(arity) for arity in self.arities)


@dataclass(frozen=True)
class State:
    shape: SystemShape
    table: tuple[Rational, ...]

    def __post_init__(self):
        object.__setattr__(self, 'table', as_rationals(self.table))
        validate_table(self.shape, self.table)

    @classmethod
    def deterministic(cls, shape, outcomes):
        """Tabela 0/1 com P(outcomes[x] | x) = 1"""
        if len(outcomes) != shape.settings_count:
            raise ValidationError(
                _('O rótulo tem %(given)s resultados para %(settings)s configurações.'),
                params={'given': len(outcomes), 'settings': shape.settings_count},
                code='shape_mismatch'
            )
        table = [ZERO] * shape.table_length
        for setting, outcome in enumerate(outcomes):
            table[shape.index(setting, outcome)] = ONE
        return cls(shape, tuple(table))

    def probability(self, setting, outcome):
        return self.table[self.shape.index(setting, outcome)]

    def distribution(self, setting):
        validate_index(setting, self.shape.settings_count, 'setting')
        return self.shape.block(self.table, setting)

    @cached_property
    def is_deterministic(self):
        return all(value in (ZERO, ONE) for value in self.table)

    @cached_property
    def outcomes(self):
        """Resultado determinístico de cada configuração, ou None se o estado é misto"""
        if not self.is_deterministic:
            return None
        return tuple(
            self.distribution(setting).index(ONE)
            for setting in range(self.shape.settings_count)
        )

    def __str__(self):
        if self.is_deterministic:
            return ''.join(str(outcome) for outcome in self.outcomes)
        return f'State({self.shape})'


@dataclass(frozen=True)
class PureStateLabel:
    """
    Rótulo de um estado puro determinístico: o resultado ζ_x de cada
    configuração x.
    """
    outcomes: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, 'outcomes', tuple(self.outcomes))

    @classmethod
    def gbit(cls, alpha, beta):
        """Rótulo (α, β) do g-bit: resultado a = αx ⊕ β na configuração x"""
        return cls(tuple((alpha * setting) ^ beta for setting in (0, 1)))

    @property
    def gbit_pair(self):
        """(α, β) de um rótulo de g-bit"""
        first, second = self.outcomes
        return first ^ second, first

    def to_state(self, shape=None):
        shape = shape or SystemShape.binary(len(self.outcomes))
        return State.deterministic(shape, self.outcomes)

    def __str__(self):
        return ''.join(str(outcome) for outcome in self.outcomes)


@dataclass(frozen=True)
class Effect:
    """
    Funcional afim e(ω) = offset + Σ coefficients · table(ω).
    """
    shape: SystemShape
    coefficients: tuple[Rational, ...]
    offset: Rational = ZERO

    def __post_init__(self):
        object.__setattr__(self, 'coefficients', as_rationals(self.coefficients))
        object.__setattr__(self, 'offset', Rational(self.offset))
        if len(self.coefficients) != self.shape.table_length:
            validate_same_shape(self.shape.table_length, len(self.coefficients))

    @classmethod
    def unit(cls, shape):
        return cls(shape, (ZERO,) * shape.table_length, ONE)

    def __call__(self, state):
        validate_same_shape(self.shape, state.shape)
        return self.offset + dot(self.coefficients, state.table)

    def __add__(self, other):
        validate_same_shape(self.shape, other.shape)
        return Effect(
            self.shape,
            tuple(a + b for a, b in zip(self.coefficients, other.coefficients)),
            self.offset + other.offset
        )

    def __sub__(self, other):
        validate_same_shape(self.shape, other.shape)
        return Effect(
            self.shape,
            tuple(a - b for a, b in zip(self.coefficients, other.coefficients)),
            self.offset - other.offset
        )

    def complement(self):
        """u − e"""
        return Effect.unit(self.shape) - self


@dataclass(frozen=True)
class Measurement:
    effects: tuple[Effect, ...]

    def __post_init__(self):
        object.__setattr__(self, 'effects', tuple(self.effects))
        if not self.effects:
            raise ValidationError(_('Uma medição precisa de pelo menos um efeito.'), code='empty_measurement')
        for effect in self.effects[1:]:
            validate_same_shape(self.effects[0].shape, effect.shape)

    @property
    def shape(self):
        return self.effects[0].shape

    @property
    def outcome_count(self):
        return len(self.effects)

    def probabilities(self, state):
        return tuple(effect(state) for effect in self.effects)


@dataclass(frozen=True)
class GptSystem:
    """
    Espaço de estados Ω dado pela envoltória convexa de `vertices`
    (os estados puros).

    A extremalidade dos vértices é verificada por LP em
    `lp.polytope.check_extremality`, não no construtor.
    """
    shape: SystemShape
    vertices: tuple[State, ...]
    name: str = ''

    def __post_init__(self):
        object.__setattr__(self, 'vertices', tuple(self.vertices))
        for vertex in self.vertices:
            validate_same_shape(self.shape, vertex.shape)
        validate_distinct_vertices(self.vertices)

    @property
    def vertex_count(self):
        return len(self.vertices)

    @cached_property
    def is_deterministic(self):
        return all(vertex.is_deterministic for vertex in self.vertices)

    def vertex_index(self, state):
        return self.vertices.index(state)

    def __str__(self):
        return f'{self.name or "system"} ({self.shape}, {self.vertex_count} vértices)'
