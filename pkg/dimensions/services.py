"""
Dimensão de informação e dimensão de medição de um sistema GPT.

A busca de d_m sobe nível a nível: um conjunto perfeitamente discriminável
numa medição continua discriminável após remover um estado (basta somar
dois efeitos), então só extensões de conjuntos viáveis precisam de LP.
O resultado coincide com a busca descendente sobre cliques.
"""
import logging

from django.conf import settings
from django.core.cache import cache
from django.core.exceptions import ValidationError
from django.utils.translation import gettext_lazy as _

from core.exceptions import ResourceCapExceeded
from core.parallel import run_jobs
from core.rationals import ONE, ZERO
from dimensions.cliques import maximum_clique
from dimensions.graph import build_graph, pairwise_distinguishable
from dimensions.models import DimensionReport, LevelStats, MeasurementSearch
from dimensions.programs import AffineFrame, find_measurement
from gpt.models import Effect, Measurement
from gpt.operations import is_valid_effect, is_valid_measurement
from gpt.relabeling import automorphisms
from gpt.serializers import system_digest

logger = logging.getLogger(__name__)


def information_dimension(system, graph=None, jobs=None):
    """(d_i, clique) com o clique máximo do grafo de distinguibilidade"""
    if system.vertex_count == 1:
        return 1, (0,)
    graph = graph or build_graph(system, jobs=jobs)
    return maximum_clique(graph.networkx)


def default_certify_limit(system):
    """Certificação completa até CERTIFY_VERTEX_LIMIT vértices; acima, só o nível 2"""
    if system.vertex_count <= settings.GPT_LIMITS['CERTIFY_VERTEX_LIMIT']:
        return max(system.vertex_count, 2)
    return 2


class _Orbits:
    """Forma canônica de conjuntos de vértices sob um grupo de permutações"""

    def __init__(self, group):
        self.group = group

    def canonical(self, states):
        return min(tuple(sorted(g[s] for s in states)) for g in self.group)


def _symmetry(system, use_symmetry):
    identity = [tuple(range(system.vertex_count))]
    if not use_symmetry:
        return _Orbits(identity)
    try:
        group = automorphisms(system, settings.GPT_LIMITS['SYMMETRY_GROUP_CAP'])
    except ResourceCapExceeded:
        logger.warning('%s: grupo de automorfismos grande demais, busca sem simetria', system)
        return _Orbits(identity)
    return _Orbits(group or identity)


def _extensions(feasible, adjacency, orbits):
    """
    Representantes canônicos dos conjuntos de tamanho m+1 cujos subconjuntos
    de tamanho m são todos viáveis.
    """
    candidates = set()
    for states in sorted(feasible):
        common = set.intersection(*(adjacency[s] for s in states))
        for vertex in sorted(common):
            extended = tuple(sorted(states + (vertex,)))
            canonical = orbits.canonical(extended)
            if canonical in candidates:
                continue
            if all(
                orbits.canonical(extended[:k] + extended[k + 1:]) in feasible
                for k in range(len(extended))
            ):
                candidates.add(canonical)
    return sorted(candidates)


def _measurement_job(job):
    frame, states = job
    return find_measurement(frame, states)


def measurement_dimension(system, certify_limit=None, graph=None, use_symmetry=True, jobs=None):
    """
    Maior m tal que algum m-clique é discriminado por uma única medição.

    `exact` é verdadeiro quando o nível m+1 foi esgotado sem conjunto viável
    ou m = d_i; caso contrário d_m é um limite inferior certificado.
    """
    certify_limit = default_certify_limit(system) if certify_limit is None else certify_limit
    if certify_limit < 2:
        raise ValidationError(
            _('certify_limit deve ser >= 2 (recebido %(value)s).'),
            params={'value': certify_limit},
            code='invalid_certify_limit'
        )
    unit = Measurement((Effect.unit(system.shape),))
    if system.vertex_count == 1:
        return MeasurementSearch(1, (0,), unit, True)

    graph = graph or build_graph(system, jobs=jobs)
    d_i, _clique = information_dimension(system, graph)
    if not graph.edges:
        return MeasurementSearch(1, (0,), unit, True)

    i, j = graph.edges[0]
    effect = graph.witness(i, j)
    best = MeasurementSearch(2, (i, j), Measurement((effect, effect.complement())), d_i == 2)
    limit = min(d_i, certify_limit)
    if limit <= 2:
        return best

    orbits = _symmetry(system, use_symmetry)
    adjacency = {v: set(graph.networkx.adj[v]) for v in range(system.vertex_count)}
    feasible = {orbits.canonical(edge) for edge in graph.edges}
    levels = [LevelStats(2, len(feasible), 0, len(feasible))]
    frame = AffineFrame.of(system)
    size = 2
    exhausted = False
    while size < limit:
        candidates = _extensions(feasible, adjacency, orbits)
        results = run_jobs(_measurement_job, [(frame, states) for states in candidates], jobs)
        viable = [(states, m) for states, m in zip(candidates, results) if m is not None]
        levels.append(LevelStats(size + 1, len(candidates), len(candidates), len(viable)))
        logger.info(
            '%s: nível %d, %d órbitas, %d viáveis', system, size + 1, len(candidates), len(viable)
        )
        if not viable:
            exhausted = True
            break
        size += 1
        states, measurement = viable[0]
        best = MeasurementSearch(size, states, measurement, False)
        feasible = {states for states, _measurement in viable}

    return MeasurementSearch(
        best.d_m,
        best.states,
        best.measurement,
        exhausted or best.d_m == d_i,
        tuple(levels),
        len(orbits.group),
    )


def compute_report(system, certify_limit=None, use_symmetry=True, jobs=None):
    """
    Relatório completo de dimensões, guardado no cache do Django pelo
    digest do sistema e pelos parâmetros de busca.
    """
    certify_limit = default_certify_limit(system) if certify_limit is None else certify_limit
    digest = system_digest(system)
    key = f'dims:{digest}:{certify_limit}:{int(use_symmetry)}'
    report = cache.get(key)
    if report is not None:
        logger.debug('Relatório de %s vindo do cache', system)
        return report

    graph = build_graph(system, jobs=jobs) if system.vertex_count > 1 else None
    d_i, clique = information_dimension(system, graph)
    search = measurement_dimension(system, certify_limit, graph, use_symmetry, jobs)
    report = DimensionReport(
        system_name=system.name,
        digest=digest,
        vertex_count=system.vertex_count,
        d_m=search.d_m,
        d_i=d_i,
        d_m_states=search.states,
        d_m_measurement=search.measurement,
        d_i_clique=tuple(clique),
        d_m_exact=search.exact,
        certify_limit=certify_limit,
        edge_count=len(graph.edges) if graph else 0,
        levels=search.levels,
        symmetry_group_order=search.symmetry_group_order,
    )
    cache.set(key, report)
    return report


def verify_report(system, report):
    """Reavalia todas as testemunhas do relatório; levanta ValidationError se alguma falha"""
    def fail(message, **params):
        raise ValidationError(message, params=params, code='witness_mismatch')

    if report.d_m > report.d_i:
        fail(_('d_m = %(d_m)s excede d_i = %(d_i)s.'), d_m=report.d_m, d_i=report.d_i)
    if len(report.d_i_clique) != report.d_i:
        fail(_('O clique testemunha não tem %(d_i)s estados.'), d_i=report.d_i)

    clique = report.d_i_clique
    for position, i in enumerate(clique):
        for j in clique[position + 1:]:
            effect = pairwise_distinguishable(system, i, j)
            if effect is None or effect(system.vertices[i]) != ONE or effect(system.vertices[j]) != ZERO:
                fail(_('Os estados %(i)s e %(j)s não são distinguíveis.'), i=i, j=j)
            if not is_valid_effect(effect, system):
                fail(_('Efeito inválido para o par (%(i)s, %(j)s).'), i=i, j=j)

    measurement = report.d_m_measurement
    states = report.d_m_states
    if measurement.outcome_count != report.d_m or len(states) != report.d_m:
        fail(_('A medição testemunha não tem %(d_m)s resultados.'), d_m=report.d_m)
    if not is_valid_measurement(measurement, system):
        fail(_('A medição testemunha não é válida.'))
    for position, state in enumerate(states):
        probabilities = measurement.probabilities(system.vertices[state])
        expected = tuple(ONE if k == position else ZERO for k in range(len(states)))
        if probabilities != expected:
            fail(_('O estado %(state)s não é identificado com certeza.'), state=state)
    return True
