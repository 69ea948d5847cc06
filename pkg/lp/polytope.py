"""
Consultas geométricas sobre politopos dados por vértices ou por
desigualdades, todas resolvidas por LP ou eliminação exata.
"""
import logging
from itertools import combinations, islice

from django.core.exceptions import ValidationError
from django.utils.translation import gettext_lazy as _

from core.parallel import run_jobs
from core.rationals import ONE, ZERO
from gpt.validators import validate_same_shape
from lp.choices import Relation
from lp.linalg import nullspace, solve, solve_unique
from lp.models import LinearConstraint, LpProblem
from lp.simplex import solve as solve_lp

logger = logging.getLogger(__name__)

# combinações por tarefa na enumeração paralela
ENUMERATION_BATCH = 512


def convex_hull_problem(candidate, vertices):
    """
    Pesos λ >= 0, Σ λ = 1, Σ λ_v · table(v) = table(candidate).
    """
    count = len(vertices)
    constraints = [LinearConstraint.lower_bound(count, v) for v in range(count)]
    constraints.append(LinearConstraint((ONE,) * count, Relation.EQUAL, ONE))
    for position, value in enumerate(candidate.table):
        constraints.append(LinearConstraint(
            tuple(vertex.table[position] for vertex in vertices),
            Relation.EQUAL,
            value
        ))
    return LpProblem(count, tuple(constraints))


def in_convex_hull(candidate, vertices):
    """Pesos da combinação convexa (certificado) ou None se `candidate` está fora"""
    vertices = list(vertices)
    if not vertices:
        return None
    for vertex in vertices:
        validate_same_shape(candidate.shape, vertex.shape)
    outcome = solve_lp(convex_hull_problem(candidate, vertices))
    return outcome.witness if outcome.is_feasible else None


def is_redundant_vertex(candidate, others):
    others = list(others)
    if not others:
        raise ValidationError(
            _('É preciso pelo menos um outro estado para testar redundância.'),
            code='empty_vertex_set'
        )
    return in_convex_hull(candidate, others) is not None


def _redundancy_job(job):
    vertices, index = job
    others = vertices[:index] + vertices[index + 1:]
    return bool(others) and is_redundant_vertex(vertices[index], others)


def check_extremality(system, jobs=None):
    """
    Garante que nenhum vértice é combinação convexa dos demais.

    Tabelas 0/1 distintas são sempre extremas (uma combinação que produz um
    1 exato só usa vértices com 1 naquela coordenada), sem LP.
    """
    if system.is_deterministic or system.vertex_count < 2:
        return
    vertices = list(system.vertices)
    flags = run_jobs(_redundancy_job, [(vertices, i) for i in range(len(vertices))], jobs)
    for index, redundant in enumerate(flags):
        if redundant:
            raise ValidationError(
                _('O vértice %(index)s é combinação convexa dos demais.'),
                params={'index': index},
                code='redundant_vertex'
            )


def _candidate_vertices(job):
    reduced_rows, reduced_rhs, combos = job
    found = []
    for combo in combos:
        parameters = solve_unique(
            [reduced_rows[i] for i in combo],
            [reduced_rhs[i] for i in combo]
        )
        if parameters is None:
            continue
        feasible = all(
            sum((g * t for g, t in zip(row, parameters)), ZERO) >= rhs
            for row, rhs in zip(reduced_rows, reduced_rhs)
        )
        if feasible:
            found.append(parameters)
    return found


def _batches(iterable, size):
    iterator = iter(iterable)
    while batch := list(islice(iterator, size)):
        yield batch


def enumerate_vertices(equalities, inequalities, jobs=None):
    """
    Vértices do politopo limitado {x : A x = b, G x >= h}.

    `equalities` e `inequalities` são listas de (coeficientes, rhs). O
    politopo é parametrizado como x = x0 + N t no núcleo de A; cada
    subconjunto de dim(t) desigualdades justas com solução única é um
    candidato, mantido se satisfaz todas as desigualdades.
    """
    width = len(inequalities[0][0]) if inequalities else len(equalities[0][0])
    if equalities:
        matrix = [list(row) for row, _ in equalities]
        origin = solve(matrix, [rhs for _, rhs in equalities])
        if origin is None:
            return []
        directions = nullspace(matrix)
    else:
        origin = (ZERO,) * width
        directions = nullspace([], width)
    dimension = len(directions)

    reduced_rows, reduced_rhs = [], []
    for row, rhs in inequalities:
        reduced_rows.append(tuple(
            sum((g * d for g, d in zip(row, direction)), ZERO)
            for direction in directions
        ))
        reduced_rhs.append(rhs - sum((g * o for g, o in zip(row, origin)), ZERO))

    if dimension == 0:
        feasible = all(rhs <= ZERO for rhs in reduced_rhs)
        return [tuple(origin)] if feasible else []

    combos = combinations(range(len(inequalities)), dimension)
    jobs_list = [
        (reduced_rows, reduced_rhs, batch)
        for batch in _batches(combos, ENUMERATION_BATCH)
    ]
    logger.info(
        'Enumerando vértices: %d desigualdades, dimensão afim %d, %d lotes',
        len(inequalities), dimension, len(jobs_list)
    )
    points = set()
    for found in run_jobs(_candidate_vertices, jobs_list, jobs, chunksize=1):
        for parameters in found:
            points.add(tuple(
                o + sum((t * d[i] for t, d in zip(parameters, directions)), ZERO)
                for i, o in enumerate(origin)
            ))
    return sorted(points)
