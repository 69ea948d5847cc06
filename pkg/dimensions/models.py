from dataclasses import dataclass, field
from functools import cached_property

import networkx as nx
from django.core.exceptions import ValidationError
from django.utils.translation import gettext_lazy as _

from gpt.models import Effect, Measurement


@dataclass(frozen=True)
class DistinguishabilityGraph:
    """
    Grafo de distinguibilidade perfeita aos pares. `witnesses[(i, j)]`, com
    i < j, é um efeito válido com e(ω_i) = 1 e e(ω_j) = 0.
    """
    vertex_count: int
    witnesses: dict[tuple[int, int], Effect] = field(default_factory=dict)

    def __post_init__(self):
        for i, j in self.witnesses:
            if not 0 <= i < j < self.vertex_count:
                raise ValidationError(
                    _('Aresta (%(i)s, %(j)s) inválida para %(count)s vértices.'),
                    params={'i': i, 'j': j, 'count': self.vertex_count},
                    code='invalid_edge'
                )

    @cached_property
    def adjacency(self):
        matrix = [[False] * self.vertex_count for _ in range(self.vertex_count)]
        for i, j in self.witnesses:
            matrix[i][j] = matrix[j][i] = True
        return tuple(tuple(row) for row in matrix)

    def are_adjacent(self, i, j):
        return (min(i, j), max(i, j)) in self.witnesses

    def witness(self, i, j):
        """Efeito com e(ω_i) = 1 e e(ω_j) = 0; para i > j é o complemento u − e"""
        if i < j:
            return self.witnesses.get((i, j))
        effect = self.witnesses.get((j, i))
        return effect.complement() if effect is not None else None

    @property
    def edges(self):
        return sorted(self.witnesses)

    @property
    def is_complete(self):
        return len(self.witnesses) == self.vertex_count * (self.vertex_count - 1) // 2

    @cached_property
    def networkx(self):
        graph = nx.Graph()
        graph.add_nodes_from(range(self.vertex_count))
        graph.add_edges_from(self.witnesses)
        return graph


@dataclass(frozen=True)
class LevelStats:
    """Um nível da busca de d_m: tamanho dos cliques testados"""
    size: int
    orbits: int
    lps_solved: int
    feasible: int


@dataclass(frozen=True)
class MeasurementSearch:
    d_m: int
    states: tuple[int, ...]
    measurement: Measurement
    exact: bool
    levels: tuple[LevelStats, ...] = ()
    symmetry_group_order: int = 1


@dataclass(frozen=True)
class DimensionReport:
    system_name: str
    digest: str
    vertex_count: int
    d_m: int
    d_i: int
    d_m_states: tuple[int, ...]
    d_m_measurement: Measurement
    d_i_clique: tuple[int, ...]
    d_m_exact: bool
    certify_limit: int
    edge_count: int
    levels: tuple[LevelStats, ...] = ()
    symmetry_group_order: int = 1

    def __post_init__(self):
        if self.d_m > self.d_i:
            raise ValidationError(
                _('d_m = %(d_m)s excede d_i = %(d_i)s.'),
                params={'d_m': self.d_m, 'd_i': self.d_i},
                code='dimension_order'
            )

    @property
    def has_mismatch(self):
        return self.d_m < self.d_i
