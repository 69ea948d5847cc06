"""
Tipos dos protocolos de comunicação.

Índices de bits são 1-based na interface (b₁…b_n, k) e 0-based por dentro.
"""
from dataclasses import dataclass, field

from django.core.exceptions import ValidationError
from django.utils.translation import gettext_lazy as _

from core.rationals import Rational
from core.utils import bits_to_index, index_to_bits
from gpt.builders import hypercube_vertex
from protocols.choices import Actor, Carrier
from protocols.validators import validate_bits, validate_one_based


@dataclass(frozen=True)
class BitString:
    bits: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, 'bits', tuple(self.bits))
        validate_bits(self.bits)

    @classmethod
    def parse(cls, text):
        text = (text or '').strip()
        if not text or set(text) - {'0', '1'}:
            raise ValidationError(
                _('"%(text)s" não é uma cadeia de bits (use só 0 e 1).'),
                params={'text': text},
                code='invalid_bits'
            )
        return cls(tuple(int(ch) for ch in text))

    @classmethod
    def from_index(cls, index, length):
        return cls(index_to_bits(index, length))

    def __len__(self):
        return len(self.bits)

    def bit(self, k):
        """b_k, com k 1-based"""
        validate_one_based(k, len(self.bits))
        return self.bits[k - 1]

    @property
    def index(self):
        return bits_to_index(self.bits)

    def __str__(self):
        return ''.join(str(bit) for bit in self.bits)


@dataclass(frozen=True)
class TruthTable:
    """
    f : X × Y → {0,1}, com `values[b][c]` indexado pelos inteiros das
    entradas de Alice (b) e de Bob (c).
    """
    n_alice_bits: int
    n_bob_bits: int
    values: tuple[tuple[int, ...], ...]
    name: str = ''

    def __post_init__(self):
        object.__setattr__(self, 'values', tuple(tuple(row) for row in self.values))
        if self.n_alice_bits < 0 or self.n_bob_bits < 0:
            raise ValidationError(_('Números de bits devem ser >= 0.'), code='invalid_size')
        rows, columns = 2 ** self.n_alice_bits, 2 ** self.n_bob_bits
        if len(self.values) != rows or any(len(row) != columns for row in self.values):
            raise ValidationError(
                _('A tabela precisa de %(rows)s linhas com %(columns)s valores.'),
                params={'rows': rows, 'columns': columns},
                code='table_length'
            )
        if any(value not in (0, 1) for row in self.values for value in row):
            raise ValidationError(_('A tabela só pode conter 0 e 1.'), code='invalid_bit')

    @property
    def alice_inputs(self):
        return len(self.values)

    @property
    def bob_inputs(self):
        return len(self.values[0])

    def row(self, b):
        """f(b, ·) como rótulo de hypercube bit com D = |Y|"""
        return self.values[_input_index(b)]

    def __call__(self, b, c):
        return self.values[_input_index(b)][_input_index(c)]


def _input_index(value):
    if isinstance(value, BitString):
        return value.index
    if value is None:
        return 0
    return value


@dataclass(frozen=True)
class TranscriptStep:
    actor: Actor
    action: str
    detail: str = ''


@dataclass(frozen=True)
class ProtocolTranscript:
    """
    Registro de uma execução: Alice prepara o rótulo ζ, Bob mede a
    configuração `setting` (0-based) e obtém `outcome`.
    """
    zeta: tuple[int, ...]
    setting: int
    outcome: int
    message_bits: tuple[int, ...] = ()
    steps: tuple[TranscriptStep, ...] = ()

    @property
    def k(self):
        return self.setting + 1

    def replay(self):
        """Reexecuta preparação e medição; devolve o resultado obtido"""
        distribution = hypercube_vertex(self.zeta).distribution(self.setting)
        return distribution.index(max(distribution))

    @property
    def is_consistent(self):
        return self.replay() == self.outcome


@dataclass(frozen=True)
class IcReport:
    n: int
    carrier: Carrier
    per_index: tuple[float, ...]
    total: float
    capacity: float
    measurement_dimension: int = 2
    violated: bool = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, 'violated', self.total > self.capacity)


@dataclass(frozen=True)
class CcReport:
    function: str
    n_alice_bits: int
    n_bob_bits: int
    hypercube_dimension: int
    pairs_checked: int
    correct: int
    communication_bits: float

    @property
    def correct_fraction(self):
        return Rational(self.correct, self.pairs_checked)


@dataclass(frozen=True)
class PrBoxSimulation:
    """Distribuição exata da saída de Bob ao simular um hypercube bit com caixas PR"""
    zeta: tuple[int, ...]
    setting: int
    distribution: tuple[Rational, Rational]
    assignments: int
    boxes_used: int
    message_bits: int

    @property
    def is_point_mass(self):
        return 1 in self.distribution

    @property
    def output(self):
        return self.distribution.index(1) if self.is_point_mass else None
