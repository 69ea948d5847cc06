import logging
from itertools import combinations

from django.conf import settings
from django.core.exceptions import ValidationError
from django.utils.translation import gettext_lazy as _

from core.exceptions import ResourceCapExceeded
from core.parallel import run_jobs
from core.rationals import ONE, ZERO
from dimensions.models import DistinguishabilityGraph
from dimensions.programs import AffineFrame, find_effect
from gpt.operations import atomic_effect
from gpt.validators import validate_index

logger = logging.getLogger(__name__)


def atomic_witness(system, i, j):
    """Efeito atômico com P = 1 em ω_i e P = 0 em ω_j, se houver"""
    first, second = system.vertices[i], system.vertices[j]
    shape = system.shape
    for setting in range(shape.settings_count):
        for outcome in range(shape.arities[setting]):
            if first.probability(setting, outcome) == ONE and second.probability(setting, outcome) == ZERO:
                return atomic_effect(shape, setting, outcome)
    return None


def pairwise_distinguishable(system, i, j, use_shortcuts=True, frame=None):
    """
    Efeito válido com e(ω_i) = 1 e e(ω_j) = 0, ou None se não existe.
    """
    validate_index(i, system.vertex_count, 'i')
    validate_index(j, system.vertex_count, 'j')
    if i == j:
        raise ValidationError(
            _('Um estado não é distinguível de si mesmo (i = j = %(index)s).'),
            params={'index': i},
            code='same_vertex'
        )
    if use_shortcuts:
        effect = atomic_witness(system, i, j)
        if effect is not None:
            return effect
    return find_effect(frame or AffineFrame.of(system), i, j)


def _pair_job(job):
    frame, i, j = job
    return find_effect(frame, i, j)


def build_graph(system, use_shortcuts=True, jobs=None):
    count = system.vertex_count
    if count < 2:
        raise ValidationError(
            _('O grafo de distinguibilidade exige pelo menos 2 vértices.'),
            code='too_few_vertices'
        )
    cap = settings.GPT_LIMITS['GRAPH_MAX_VERTICES']
    if count > cap:
        raise ResourceCapExceeded(_('Vértices do grafo de distinguibilidade'), count, cap)

    witnesses = {}
    pending = []
    for i, j in combinations(range(count), 2):
        effect = atomic_witness(system, i, j) if use_shortcuts else None
        if effect is not None:
            witnesses[(i, j)] = effect
        else:
            pending.append((i, j))

    if pending:
        logger.info('%s: %d pares resolvidos por LP', system, len(pending))
        frame = AffineFrame.of(system)
        results = run_jobs(_pair_job, [(frame, i, j) for i, j in pending], jobs)
        for (i, j), effect in zip(pending, results):
            if effect is not None:
                witnesses[(i, j)] = effect

    return DistinguishabilityGraph(count, dict(sorted(witnesses.items())))
