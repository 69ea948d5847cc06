"""
Testes do LP exato: simplex, álgebra linear e politopos, com um oráculo por força bruta
"""
from itertools import combinations

import pytest
from django.core.exceptions import ValidationError

from core.rationals import HALF, ONE, ZERO, Rational
from dimensions.programs import AffineFrame, pairwise_problem
from gpt.builders import make_gbit
from gpt.models import GptSystem, State, SystemShape
from lp.choices import LpStatus, Relation
from lp.linalg import affine_basis, affine_coordinates, nullspace, rank, solve, solve_unique
from lp.models import LinearConstraint, LpProblem
from lp.polytope import check_extremality, enumerate_vertices, in_convex_hull, is_redundant_vertex
from lp.simplex import solve as solve_lp
from lp.simplex import verify_witness
from tests.factories import BoundedLpFactory


def brute_force_vertices(problem):
    """Pontos viáveis que zeram n restrições linearmente independentes"""
    n = problem.variable_count
    points = set()
    for subset in combinations(problem.constraints, n):
        point = solve_unique([c.coefficients for c in subset], [c.rhs for c in subset])
        if point is not None and all(c.is_satisfied(point) for c in problem.constraints):
            points.add(point)
    return points


def oracle(problem):
    """(viável, ótimo) para regiões limitadas: o ótimo é atingido num vértice"""
    points = brute_force_vertices(problem)
    if not points:
        return False, None
    if problem.objective is None:
        return True, None
    return True, max(sum((c * x for c, x in zip(problem.objective, p)), ZERO) for p in points)


def gbit_distinguishability_family():
    """Todos os LPs de par do g-bit, variantes com e(ω_j) = 1/2 e versões com objetivo"""
    frame = AffineFrame.of(make_gbit())
    problems = []
    for i in range(4):
        for j in range(4):
            if i == j:
                continue
            base = pairwise_problem(frame, i, j)
            problems.append(base)
            relaxed = list(base.constraints)
            relaxed[1] = LinearConstraint(relaxed[1].coefficients, Relation.EQUAL, HALF)
            problems.append(LpProblem(base.variable_count, tuple(relaxed)))
            objective = tuple(Rational(k + 1) for k in range(base.variable_count))
            problems.append(LpProblem(base.variable_count, base.constraints, objective))
    return problems


@pytest.mark.unit
class TestLinalg:
    """Testes da álgebra linear exata"""

    def test_rank_and_solve(self):
        matrix = [[1, 2], [2, 4], [0, 1]]
        assert rank(matrix) == 2
        assert solve(matrix, [3, 6, 1]) == (1, 1)
        assert solve(matrix, [3, 7, 1]) is None

    def test_solve_unique_rejects_singular(self):
        assert solve_unique([[1, 1], [2, 2]], [1, 2]) is None
        assert solve_unique([[2, 0], [0, 4]], [1, 1]) == (HALF, Rational(1, 4))

    def test_nullspace(self):
        basis = nullspace([[1, 1, 0]])
        assert len(basis) == 2
        for vector in basis:
            assert vector[0] + vector[1] == 0

    def test_nullspace_of_empty_matrix(self):
        assert len(nullspace([], 3)) == 3

    def test_affine_basis_of_square(self):
        tables = [v.table for v in make_gbit().vertices]
        basis = affine_basis(tables)
        assert basis == [0, 1, 2]
        coordinates = affine_coordinates(tables[3], [tables[b] for b in basis])
        assert sum(coordinates) == ONE
        assert coordinates == (ONE, -ONE, ONE)


@pytest.mark.unit
class TestSimplex:
    """Testes do simplex em duas fases"""

    def test_feasible_with_witness(self):
        problem = LpProblem(2, (
            LinearConstraint((1, 1), Relation.LESS_EQUAL, 4),
            LinearConstraint((1, -1), Relation.GREATER_EQUAL, 1),
            LinearConstraint.lower_bound(2, 0),
            LinearConstraint.lower_bound(2, 1),
        ))
        outcome = solve_lp(problem)
        assert outcome.status == LpStatus.FEASIBLE
        assert verify_witness(problem, outcome.witness)

    def test_infeasible_reports_phase_one_optimum(self):
        problem = LpProblem(1, (
            LinearConstraint((1,), Relation.GREATER_EQUAL, 2),
            LinearConstraint((1,), Relation.LESS_EQUAL, 1),
        ))
        outcome = solve_lp(problem)
        assert outcome.status == LpStatus.INFEASIBLE
        assert outcome.witness is None
        assert outcome.optimum > 0

    def test_optimum_with_free_variables(self):
        problem = LpProblem(2, (
            LinearConstraint((1, 0), Relation.LESS_EQUAL, 3),
            LinearConstraint((0, 1), Relation.LESS_EQUAL, -1),
            LinearConstraint((1, 1), Relation.GREATER_EQUAL, -10),
        ), objective=(1, 1))
        outcome = solve_lp(problem)
        assert outcome.status == LpStatus.FEASIBLE
        assert outcome.optimum == 2
        assert outcome.witness == (3, -1)

    def test_unbounded(self):
        problem = LpProblem(1, (LinearConstraint((1,), Relation.GREATER_EQUAL, 0),), objective=(1,))
        assert solve_lp(problem).status == LpStatus.UNBOUNDED

    def test_equalities_with_redundant_rows(self):
        problem = LpProblem(2, (
            LinearConstraint((1, 1), Relation.EQUAL, 1),
            LinearConstraint((2, 2), Relation.EQUAL, 2),
            LinearConstraint.lower_bound(2, 0),
            LinearConstraint.lower_bound(2, 1),
        ), objective=(1, 0))
        outcome = solve_lp(problem)
        assert outcome.optimum == 1
        assert outcome.witness == (1, 0)

    def test_dimension_mismatch(self):
        with pytest.raises(ValidationError) as exc:
            LpProblem(2, (LinearConstraint((1,), Relation.EQUAL, 1),))
        assert exc.value.code == 'dimension_mismatch'

    def test_gbit_family_matches_brute_force(self):
        for problem in gbit_distinguishability_family():
            feasible, optimum = oracle(problem)
            outcome = solve_lp(problem)
            assert outcome.is_feasible == feasible
            if feasible:
                assert verify_witness(problem, outcome.witness)
            if optimum is not None:
                assert outcome.optimum == optimum

    def test_random_bounded_problems_match_brute_force(self):
        for problem in BoundedLpFactory.build_batch(40):
            feasible, optimum = oracle(problem)
            outcome = solve_lp(problem)
            assert outcome.is_feasible == feasible
            if feasible:
                assert outcome.status == LpStatus.FEASIBLE
                assert verify_witness(problem, outcome.witness)
                assert outcome.optimum == optimum


@pytest.mark.unit
class TestPolytope:
    """Testes de envoltória convexa, extremalidade e enumeração de vértices"""

    def test_center_in_hull_with_certificate(self):
        gbit = make_gbit()
        center = State(gbit.shape, (HALF,) * 4)
        weights = in_convex_hull(center, gbit.vertices)
        assert weights is not None
        assert sum(weights) == ONE
        assert all(w >= 0 for w in weights)

    def test_vertex_not_in_hull_of_others(self):
        gbit = make_gbit()
        assert not is_redundant_vertex(gbit.vertices[0], gbit.vertices[1:])

    def test_redundancy_needs_other_states(self):
        with pytest.raises(ValidationError) as exc:
            is_redundant_vertex(make_gbit().vertices[0], [])
        assert exc.value.code == 'empty_vertex_set'

    def test_check_extremality_rejects_midpoint(self):
        shape = SystemShape.binary(1)
        vertices = [
            State.deterministic(shape, (0,)),
            State.deterministic(shape, (1,)),
            State(shape, (HALF, HALF)),
        ]
        with pytest.raises(ValidationError) as exc:
            check_extremality(GptSystem(shape, vertices))
        assert exc.value.code == 'redundant_vertex'

    def test_enumerate_square(self):
        # 0 <= x, y <= 1
        inequalities = [
            ((1, 0), 0), ((0, 1), 0), ((-1, 0), -1), ((0, -1), -1),
        ]
        points = enumerate_vertices([], inequalities)
        assert points == [(0, 0), (0, 1), (1, 0), (1, 1)]

    def test_enumerate_simplex_with_equality(self):
        inequalities = [((1, 0, 0), 0), ((0, 1, 0), 0), ((0, 0, 1), 0)]
        points = enumerate_vertices([((1, 1, 1), 1)], inequalities)
        assert points == [(0, 0, 1), (0, 1, 0), (1, 0, 0)]
