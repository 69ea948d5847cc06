"""
Caixas multipartidas sem sinalização e rótulos de correlação.
"""
from dataclasses import dataclass
from functools import cached_property
from itertools import product

from django.core.exceptions import ValidationError
from django.utils.translation import gettext_lazy as _

from composition.choices import BoxKind
from composition.validators import box_position, validate_box_table
from core.rationals import ONE, ZERO, Rational, as_rationals
from core.utils import bits_to_index
from gpt.models import State, SystemShape


@dataclass(frozen=True)
class NsBox:
    """
    P(a₁…a_k | x₁…x_k) com o mesmo formato (settings × outcomes) em cada
    parte. A tabela percorre as configurações conjuntas por fora e os
    resultados conjuntos por dentro, parte 1 mais significativa.
    """
    parties: int
    settings: int
    outcomes: int
    table: tuple[Rational, ...]

    def __post_init__(self):
        object.__setattr__(self, 'table', as_rationals(self.table))
        validate_box_table(self.parties, self.settings, self.outcomes, self.table)

    @property
    def joint_settings(self):
        return list(product(range(self.settings), repeat=self.parties))

    @property
    def joint_outcomes(self):
        return list(product(range(self.outcomes), repeat=self.parties))

    @property
    def party_shape(self):
        return SystemShape((self.outcomes,) * self.settings)

    def probability(self, joint_setting, joint_outcome):
        return self.table[box_position(self.settings, self.outcomes, joint_setting, joint_outcome)]

    @cached_property
    def is_deterministic(self):
        return all(value in (ZERO, ONE) for value in self.table)

    def local_distribution(self, party, setting):
        """P(a_party | x_party), bem definida por não sinalização"""
        joint_setting = tuple(setting if p == party else 0 for p in range(self.parties))
        distribution = [ZERO] * self.outcomes
        for joint_outcome in self.joint_outcomes:
            distribution[joint_outcome[party]] += self.probability(joint_setting, joint_outcome)
        return tuple(distribution)

    @cached_property
    def has_uniform_marginals(self):
        uniform = (Rational(1, self.outcomes),) * self.outcomes
        return all(
            self.local_distribution(party, setting) == uniform
            for party in range(self.parties)
            for setting in range(self.settings)
        )

    @cached_property
    def has_deterministic_locals(self):
        return all(
            set(self.local_distribution(party, setting)) <= {ZERO, ONE}
            for party in range(self.parties)
            for setting in range(self.settings)
        )

    @property
    def kind(self):
        if self.has_deterministic_locals:
            return BoxKind.LOCAL_DETERMINISTIC
        if self.has_uniform_marginals and self.parity_is_deterministic:
            return BoxKind.NONLOCAL
        return BoxKind.OTHER

    @cached_property
    def parity_is_deterministic(self):
        if self.outcomes != 2:
            return False
        for joint_setting in self.joint_settings:
            odd = sum(
                (self.probability(joint_setting, joint_outcome)
                 for joint_outcome in self.joint_outcomes if sum(joint_outcome) % 2),
                ZERO
            )
            if odd not in (ZERO, ONE):
                return False
        return True

    def as_state(self):
        """Caixa de uma parte vista como estado de um sistema isolado"""
        if self.parties != 1:
            raise ValidationError(
                _('Só caixas de uma parte são estados locais (recebido %(parties)s partes).'),
                params={'parties': self.parties},
                code='not_single_party'
            )
        return State(self.party_shape, self.table)


@dataclass(frozen=True)
class BoxCorrelationLabel:
    """
    Função booleana f sobre {0,1}^k com a₁ ⊕ … ⊕ a_k = f(x₁, …, x_k).
    `function[i]` é f na configuração de índice i (bits, mais significativo
    primeiro).
    """
    function: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, 'function', tuple(self.function))
        length = len(self.function)
        if length < 2 or length & (length - 1) or set(self.function) - {0, 1}:
            raise ValidationError(
                _('Tabela de função booleana inválida: %(function)s'),
                params={'function': self.function},
                code='invalid_function'
            )

    @classmethod
    def bipartite(cls, alpha, beta, gamma, delta):
        """a₁ ⊕ a₂ = αx₁x₂ ⊕ βx₁ ⊕ γx₂ ⊕ δ"""
        return cls(tuple(
            (alpha * x1 * x2) ^ (beta * x1) ^ (gamma * x2) ^ delta
            for x1, x2 in product((0, 1), repeat=2)
        ))

    @property
    def parties(self):
        return len(self.function).bit_length() - 1

    @property
    def bits(self):
        """(α, β, γ, δ) no caso bipartido"""
        if self.parties != 2:
            return None
        f00, f01, f10, f11 = self.function
        return f00 ^ f01 ^ f10 ^ f11, f10 ^ f00, f01 ^ f00, f00

    def __call__(self, *xs):
        return self.function[bits_to_index(xs)]

    def to_state(self):
        """Estado projetado: determinístico com ζ(x) = f(x) sobre 2^k configurações"""
        return State.deterministic(SystemShape.binary(len(self.function)), self.function)

    def __str__(self):
        if self.parties == 2:
            return 'α={} β={} γ={} δ={}'.format(*self.bits)
        return ''.join(str(value) for value in self.function)


