"""
Programas lineares de discriminação.

Um efeito é determinado pelos seus valores numa base afim B dos vértices:
e(v) = Σ_b λ_{v,b} · e(b), com λ as coordenadas afins de v. As variáveis
dos LPs são esses valores, então e(b) >= 0 vira restrição de sinal e o
resto do sistema só entra pelas linhas λ_v.
"""
from dataclasses import dataclass

from core.rationals import ONE, ZERO
from gpt.models import Effect, Measurement
from lp.choices import Relation
from lp.linalg import affine_basis, affine_coordinates, solve
from lp.models import LinearConstraint, LpProblem
from lp.simplex import solve as solve_lp


@dataclass(frozen=True)
class AffineFrame:
    system: object
    basis: tuple[int, ...]
    coordinates: tuple[tuple, ...]

    @classmethod
    def of(cls, system):
        tables = [vertex.table for vertex in system.vertices]
        basis = tuple(affine_basis(tables))
        basis_points = [tables[b] for b in basis]
        coordinates = tuple(affine_coordinates(table, basis_points) for table in tables)
        return cls(system, basis, coordinates)

    @property
    def size(self):
        return len(self.basis)

    def effect_from_values(self, values):
        """O efeito em coordenadas de tabela com e(b) = values[b] na base"""
        tables = [self.system.vertices[b].table for b in self.basis]
        matrix = [list(table) + [ONE] for table in tables]
        solution = solve(matrix, list(values))
        return Effect(self.system.shape, solution[:-1], solution[-1])


def _row(coordinates, offset, width):
    row = [ZERO] * width
    row[offset:offset + len(coordinates)] = coordinates
    return tuple(row)


def pairwise_problem(frame, i, j):
    """e(ω_i) = 1, e(ω_j) = 0, 0 <= e(v) <= 1 nos demais vértices"""
    width = frame.size
    constraints = [
        LinearConstraint(frame.coordinates[i], Relation.EQUAL, ONE),
        LinearConstraint(frame.coordinates[j], Relation.EQUAL, ZERO),
    ]
    for v, coordinates in enumerate(frame.coordinates):
        if v in (i, j):
            continue
        constraints.append(LinearConstraint(coordinates, Relation.GREATER_EQUAL, ZERO))
        constraints.append(LinearConstraint(coordinates, Relation.LESS_EQUAL, ONE))
    return LpProblem(width, tuple(constraints))


def discrimination_problem(frame, states):
    """
    Efeitos e_1..e_m com e_i(ω_{s_j}) = δ_ij, Σ e_i = u e e_i >= 0.

    Σ e_i = u vale em todos os vértices porque vale na base e Σ λ = 1;
    e_i <= 1 segue da soma com os demais efeitos não negativos.
    """
    m, size = len(states), frame.size
    width = m * size
    constraints = []
    for effect in range(m):
        offset = effect * size
        for position, state in enumerate(states):
            constraints.append(LinearConstraint(
                _row(frame.coordinates[state], offset, width),
                Relation.EQUAL,
                ONE if position == effect else ZERO
            ))
        for v, coordinates in enumerate(frame.coordinates):
            if v not in states:
                constraints.append(LinearConstraint(
                    _row(coordinates, offset, width), Relation.GREATER_EQUAL, ZERO
                ))
    for b in range(size):
        row = [ZERO] * width
        for effect in range(m):
            row[effect * size + b] = ONE
        constraints.append(LinearConstraint(tuple(row), Relation.EQUAL, ONE))
    return LpProblem(width, tuple(constraints))


def find_effect(frame, i, j):
    outcome = solve_lp(pairwise_problem(frame, i, j))
    if not outcome.is_feasible:
        return None
    return frame.effect_from_values(outcome.witness)


def find_measurement(frame, states):
    outcome = solve_lp(discrimination_problem(frame, states))
    if not outcome.is_feasible:
        return None
    size = frame.size
    return Measurement(tuple(
        frame.effect_from_values(outcome.witness[effect * size:(effect + 1) * size])
        for effect in range(len(states))
    ))
