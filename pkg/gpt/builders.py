"""
Sistemas canônicos: g-bit, hypercube bit e simplexo clássico.
"""
from itertools import product

from django.core.exceptions import ValidationError
from django.utils.translation import gettext_lazy as _

from gpt.choices import SystemKind
from gpt.models import GptSystem, PureStateLabel, State, SystemShape

# Rotulagem canônica ω₁..ω₄ do g-bit, como (resultado em x=0, resultado em x=1);
# vértices consecutivos são adjacentes no quadrado.
GBIT_LABELS = ((0, 0), (1, 0), (1, 1), (0, 1))


def make_gbit():
    shape = SystemShape.binary(2)
    vertices = [PureStateLabel(outcomes).to_state(shape) for outcomes in GBIT_LABELS]
    return GptSystem(shape, vertices, name=SystemKind.GBIT.value)


def make_hypercube(dimension):
    """
    Hypercube bit com D configurações binárias: os 2^D rótulos {ζ_i}
    em ordem lexicográfica.
    """
    if not isinstance(dimension, int) or dimension < 1:
        raise ValidationError(
            _('A dimensão D do hypercube bit deve ser >= 1 (recebido %(value)s).'),
            params={'value': dimension},
            code='invalid_dimension'
        )
    shape = SystemShape.binary(dimension)
    vertices = [
        State.deterministic(shape, outcomes)
        for outcomes in product((0, 1), repeat=dimension)
    ]
    return GptSystem(shape, vertices, name=f'{SystemKind.HYPERCUBE.value}(D={dimension})')


def make_classical(dimension):
    """Simplexo clássico: uma configuração com d resultados e d estados puros"""
    if not isinstance(dimension, int) or dimension < 2:
        raise ValidationError(
            _('Um sistema clássico precisa de d >= 2 (recebido %(value)s).'),
            params={'value': dimension},
            code='invalid_dimension'
        )
    shape = SystemShape((dimension,))
    vertices = [State.deterministic(shape, (outcome,)) for outcome in range(dimension)]
    return GptSystem(shape, vertices, name=f'{SystemKind.CLASSICAL.value}(d={dimension})')


def gbit_vertex(alpha, beta):
    """Vértice do g-bit com rótulo (α, β), a = αx ⊕ β"""
    return PureStateLabel.gbit(alpha, beta).to_state(SystemShape.binary(2))


def hypercube_vertex(outcomes):
    """Vértice {ζ_i} de um hypercube bit, sem construir os 2^D vértices do sistema"""
    return State.deterministic(SystemShape.binary(len(outcomes)), tuple(outcomes))
