"""
Reetiquetagens de sistemas: permutação das configurações combinada com
permutações dos resultados de cada configuração.

A busca é em profundidade sobre as configurações do sistema alvo. Uma
atribuição parcial só é estendida se o multiconjunto dos prefixos de
tabela já reetiquetados coincide com o do alvo.
"""
import logging
from collections import Counter
from dataclasses import dataclass
from itertools import permutations

from core.exceptions import ResourceCapExceeded
from gpt.models import State

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Relabeling:
    """
    A configuração j do alvo é a configuração `settings[j]` da origem, com o
    resultado a da origem lido como `outcomes[j][a]`. `vertex_map[v]` é o
    índice no alvo da imagem do vértice v.
    """
    settings: tuple[int, ...]
    outcomes: tuple[tuple[int, ...], ...]
    vertex_map: tuple[int, ...]

    def apply(self, state, target_shape):
        table = []
        for setting, sigma in zip(self.settings, self.outcomes):
            table.extend(_permute(state.distribution(setting), sigma))
        return State(target_shape, tuple(table))

    @property
    def is_identity(self):
        return all(v == i for i, v in enumerate(self.vertex_map))


def _permute(distribution, sigma):
    result = [None] * len(distribution)
    for outcome, value in enumerate(distribution):
        result[sigma[outcome]] = value
    return tuple(result)


def find_relabelings(source, target):
    """Gera, em ordem determinística, todas as reetiquetagens de `source` sobre `target`"""
    if source.vertex_count != target.vertex_count:
        return
    if sorted(source.shape.arities) != sorted(target.shape.arities):
        return

    settings_count = target.shape.settings_count
    source_blocks = [
        [vertex.distribution(x) for x in range(settings_count)]
        for vertex in source.vertices
    ]
    target_blocks = [
        [vertex.distribution(x) for x in range(settings_count)]
        for vertex in target.vertices
    ]
    target_prefix_counts = [
        Counter(tuple(blocks[:j + 1]) for blocks in target_blocks)
        for j in range(settings_count)
    ]
    target_index = {vertex.table: index for index, vertex in enumerate(target.vertices)}
    permutations_by_arity = {
        arity: list(permutations(range(arity))) for arity in set(target.shape.arities)
    }

    def extend(j, used, chosen, sigmas, prefixes):
        if j == settings_count:
            vertex_map = tuple(
                target_index[tuple(value for block in prefix for value in block)]
                for prefix in prefixes
            )
            yield Relabeling(tuple(chosen), tuple(sigmas), vertex_map)
            return
        arity = target.shape.arities[j]
        for setting in range(settings_count):
            if setting in used or source.shape.arities[setting] != arity:
                continue
            for sigma in permutations_by_arity[arity]:
                extended = [
                    prefix + (_permute(blocks[setting], sigma),)
                    for prefix, blocks in zip(prefixes, source_blocks)
                ]
                if Counter(extended) != target_prefix_counts[j]:
                    continue
                yield from extend(
                    j + 1, used | {setting}, chosen + [setting], sigmas + [sigma], extended
                )

    yield from extend(0, frozenset(), [], [], [() for _ in source.vertices])


def automorphisms(system, cap):
    """
    Permutações de vértices induzidas pelas reetiquetagens de `system` sobre
    si mesmo. Levanta ResourceCapExceeded se o grupo passa de `cap`.
    """
    group = []
    seen = set()
    for relabeling in find_relabelings(system, system):
        if relabeling.vertex_map in seen:
            continue
        seen.add(relabeling.vertex_map)
        group.append(relabeling.vertex_map)
        if len(group) > cap:
            raise ResourceCapExceeded('Grupo de automorfismos', f'> {cap}', cap)
    logger.debug('%s: %d automorfismos', system, len(group))
    return group
