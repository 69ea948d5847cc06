"""
Memória do demônio, livro de energia e transformações reversíveis.

Custos em unidades de bit (k_B·T·log 2); a conversão para joules só acontece
no relatório, quando a temperatura é informada.
"""
from dataclasses import dataclass, field, replace
from math import log

from django.conf import settings

from core.rationals import ZERO, Rational
from gpt.builders import hypercube_vertex
from thermo.choices import LedgerOperation
from thermo.validators import (
    validate_cost,
    validate_dimension,
    validate_permutation,
    validate_vertex,
)


@dataclass
class MemoryState:
    """Estado mutável de um único protocolo: vértice ζ, registro clássico e relógio"""
    dimension: int
    zeta: list[int] = None
    classical_register: list[int] = field(default_factory=list)
    clock: int = 0

    def __post_init__(self):
        validate_dimension(self.dimension)
        self.zeta = [0] * self.dimension if self.zeta is None else list(self.zeta)
        validate_vertex(self.zeta, self.dimension)

    @property
    def vertex(self):
        return hypercube_vertex(self.zeta)

    def tick(self):
        self.clock += 1
        return self.clock

    def copy(self):
        return replace(self, zeta=list(self.zeta), classical_register=list(self.classical_register))


@dataclass(frozen=True)
class LedgerEntry:
    step: int
    operation: LedgerOperation
    cost_bits: Rational = ZERO
    detail: str = ''

    def __post_init__(self):
        object.__setattr__(self, 'operation', LedgerOperation(self.operation))
        object.__setattr__(self, 'cost_bits', Rational(self.cost_bits))
        validate_cost(self.operation, self.cost_bits)


class EnergyLedger:
    """Registro só de inclusão; entradas não mudam depois de gravadas"""

    def __init__(self):
        self._entries = []

    def record(self, step, operation, cost_bits=ZERO, detail=''):
        entry = LedgerEntry(step, operation, cost_bits, detail)
        self._entries.append(entry)
        return entry

    @property
    def entries(self):
        return tuple(self._entries)

    @property
    def total_cost(self):
        return sum((entry.cost_bits for entry in self._entries), ZERO)

    @property
    def erased_bits(self):
        return sum(
            (entry.cost_bits for entry in self._entries
             if entry.operation == LedgerOperation.ERASE_REGISTER),
            ZERO
        )

    def __len__(self):
        return len(self._entries)

    def __iter__(self):
        return iter(self._entries)


@dataclass(frozen=True)
class ReversibleTransform:
    """ζ'_i = ζ_{π(i)} ⊕ m_i: leva vértices em vértices, sem custo"""
    permutation: tuple[int, ...]
    mask: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, 'permutation', tuple(self.permutation))
        object.__setattr__(self, 'mask', tuple(self.mask))
        validate_permutation(self.permutation)
        validate_vertex(self.mask, len(self.permutation))

    @classmethod
    def identity(cls, dimension):
        return cls(tuple(range(dimension)), (0,) * dimension)

    @classmethod
    def flip(cls, dimension, setting):
        return cls(tuple(range(dimension)), tuple(int(i == setting) for i in range(dimension)))

    @classmethod
    def reset(cls, zeta, target):
        """Rotação que leva ζ ao vértice alvo"""
        return cls(tuple(range(len(zeta))), tuple(a ^ b for a, b in zip(zeta, target)))

    @property
    def dimension(self):
        return len(self.permutation)

    @property
    def is_identity(self):
        return self == ReversibleTransform.identity(self.dimension)

    def apply(self, zeta):
        validate_vertex(zeta, self.dimension)
        return tuple(zeta[source] ^ bit for source, bit in zip(self.permutation, self.mask))

    def inverse(self):
        inverse = [0] * self.dimension
        for position, source in enumerate(self.permutation):
            inverse[source] = position
        return ReversibleTransform(tuple(inverse), tuple(self.mask[i] for i in inverse))

    def compose(self, other):
        """Aplica `other` e depois `self`"""
        return ReversibleTransform(
            tuple(other.permutation[i] for i in self.permutation),
            tuple(other.mask[i] ^ bit for i, bit in zip(self.permutation, self.mask)),
        )


@dataclass(frozen=True)
class Readback:
    k: int
    value: int
    expected: int

    @property
    def matches(self):
        return self.value == self.expected


@dataclass(frozen=True)
class DemonReport:
    dimension: int
    decisions: tuple[int, ...]
    stored_bits: int
    total_cost_bits: Rational
    landauer_bound_bits: Rational
    entries: tuple[LedgerEntry, ...]
    final_zeta: tuple[int, ...]
    readback: Readback = None
    temperature: float = None
    deficit_bits: Rational = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, 'deficit_bits', self.landauer_bound_bits - self.total_cost_bits)

    def joules(self, bits):
        if self.temperature is None:
            return None
        return float(bits) * settings.BOLTZMANN_CONSTANT * self.temperature * log(2)

    @property
    def energy_joules(self):
        return self.joules(self.total_cost_bits)

    @property
    def landauer_joules(self):
        return self.joules(self.landauer_bound_bits)
