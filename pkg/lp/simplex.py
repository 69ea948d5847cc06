"""
Simplex exato em duas fases sobre racionais.

Tableau denso com a regra de Bland (menor índice entra, empate na razão
resolvido pelo menor índice básico), o que garante término sem ciclos.
Variáveis livres viram a diferença de duas colunas não negativas; uma
variável com restrição isolada `x >= 0` é tratada como não negativa e a
restrição sai do tableau.
"""
import logging

from core.rationals import ONE, ZERO, Rational
from lp.choices import LpStatus, Relation
from lp.models import LpOutcome

logger = logging.getLogger(__name__)


class _Tableau:
    """Linhas em forma canônica: colunas da base formam a identidade."""

    def __init__(self, rows, rhs, basis, column_count):
        self.rows = rows
        self.rhs = rhs
        self.basis = basis
        self.column_count = column_count
        self.costs = [ZERO] * column_count
        self.value = ZERO

    def price(self, cost):
        """Custos reduzidos c_j − c_B · B⁻¹A_j para o objetivo `cost` (maximização)"""
        self.costs = list(cost)
        self.value = ZERO
        for row, rhs, basic in zip(self.rows, self.rhs, self.basis):
            weight = cost[basic]
            if weight:
                for j, entry in enumerate(row):
                    if entry:
                        self.costs[j] -= weight * entry
                self.value += weight * rhs

    def pivot(self, r, c):
        row = self.rows[r]
        pivot = row[c]
        if pivot != ONE:
            row[:] = [entry / pivot for entry in row]
            self.rhs[r] /= pivot
        support = [j for j, entry in enumerate(row) if entry]
        for i, other in enumerate(self.rows):
            factor = other[c]
            if i != r and factor:
                for j in support:
                    other[j] -= factor * row[j]
                self.rhs[i] -= factor * self.rhs[r]
        factor = self.costs[c]
        if factor:
            for j in support:
                self.costs[j] -= factor * row[j]
            self.value += factor * self.rhs[r]
        self.basis[r] = c

    def optimize(self, allowed):
        """
        Pivota até a otimalidade. Retorna False se o objetivo é ilimitado.
        """
        while True:
            entering = next(
                (j for j in range(self.column_count) if allowed[j] and self.costs[j] > ZERO),
                None
            )
            if entering is None:
                return True
            leaving = None
            best = None
            for i, row in enumerate(self.rows):
                if row[entering] > ZERO:
                    ratio = self.rhs[i] / row[entering]
                    if best is None or ratio < best or (
                        ratio == best and self.basis[i] < self.basis[leaving]
                    ):
                        best, leaving = ratio, i
            if leaving is None:
                return False
            self.pivot(leaving, entering)

    def point(self):
        values = [ZERO] * self.column_count
        for rhs, basic in zip(self.rhs, self.basis):
            values[basic] = rhs
        return values


def _sign_constrained(problem):
    """Variáveis com uma restrição isolada x_k >= 0 e o índice dessas restrições"""
    nonnegative = set()
    absorbed = set()
    for position, constraint in enumerate(problem.constraints):
        support = [k for k, c in enumerate(constraint.coefficients) if c]
        if len(support) != 1 or constraint.rhs != ZERO:
            continue
        coefficient = constraint.coefficients[support[0]]
        if (constraint.relation == Relation.GREATER_EQUAL and coefficient > ZERO) or (
            constraint.relation == Relation.LESS_EQUAL and coefficient < ZERO
        ):
            nonnegative.add(support[0])
            absorbed.add(position)
    return nonnegative, absorbed


def solve(problem):
    """
    Resolve `problem` exatamente.

    Sem objetivo, para após a fase 1 (Feasible/Infeasible). Em Infeasible,
    `optimum` guarda o ótimo da fase 1 (soma das artificiais), > 0.
    """
    nonnegative, absorbed = _sign_constrained(problem)

    # colunas estruturais: (variável, sinal)
    structural = []
    for k in range(problem.variable_count):
        structural.append((k, 1))
        if k not in nonnegative:
            structural.append((k, -1))

    rows_spec = []
    for position, constraint in enumerate(problem.constraints):
        if position in absorbed:
            continue
        coefficients = [constraint.coefficients[k] * sign for k, sign in structural]
        relation, rhs = constraint.relation, constraint.rhs
        if rhs < ZERO:
            coefficients = [-c for c in coefficients]
            rhs = -rhs
            relation = {
                Relation.LESS_EQUAL: Relation.GREATER_EQUAL,
                Relation.GREATER_EQUAL: Relation.LESS_EQUAL,
            }.get(relation, relation)
        rows_spec.append((coefficients, relation, rhs))

    slack_count = sum(1 for _, relation, _ in rows_spec if relation != Relation.EQUAL)
    artificial_count = sum(1 for _, relation, _ in rows_spec if relation != Relation.LESS_EQUAL)
    first_slack = len(structural)
    first_artificial = first_slack + slack_count
    column_count = first_artificial + artificial_count

    rows, rhs, basis = [], [], []
    slack, artificial = first_slack, first_artificial
    for coefficients, relation, value in rows_spec:
        row = coefficients + [ZERO] * (column_count - len(coefficients))
        if relation == Relation.LESS_EQUAL:
            row[slack] = ONE
            basis.append(slack)
            slack += 1
        else:
            if relation == Relation.GREATER_EQUAL:
                row[slack] = -ONE
                slack += 1
            row[artificial] = ONE
            basis.append(artificial)
            artificial += 1
        rows.append(row)
        rhs.append(value)

    tableau = _Tableau(rows, rhs, basis, column_count)
    is_artificial = [j >= first_artificial for j in range(column_count)]

    # fase 1: maximizar −Σ artificiais
    if artificial_count:
        tableau.price([-ONE if flag else ZERO for flag in is_artificial])
        tableau.optimize([True] * column_count)
        infeasibility = -tableau.value
        if infeasibility > ZERO:
            logger.debug('LP inviável: ótimo da fase 1 = %s', infeasibility)
            return LpOutcome(LpStatus.INFEASIBLE, None, infeasibility)
        _drive_out_artificials(tableau, is_artificial)

    allowed = [not flag for flag in is_artificial]
    status = LpStatus.FEASIBLE
    optimum = None
    if problem.objective is not None:
        cost = [ZERO] * column_count
        for j, (k, sign) in enumerate(structural):
            cost[j] = problem.objective[k] * sign
        tableau.price(cost)
        if tableau.optimize(allowed):
            optimum = tableau.value
        else:
            status = LpStatus.UNBOUNDED

    values = tableau.point()
    witness = [ZERO] * problem.variable_count
    for j, (k, sign) in enumerate(structural):
        witness[k] += sign * values[j]
    witness = tuple(witness)
    if not verify_witness(problem, witness):
        raise ArithmeticError('Testemunha do simplex não satisfaz as restrições.')
    return LpOutcome(status, witness, optimum)


def _drive_out_artificials(tableau, is_artificial):
    """
    Remove artificiais da base (valor zero) por pivôs degenerados; linhas
    sem coluna original não nula são redundantes e saem do tableau.
    """
    r = 0
    while r < len(tableau.rows):
        if not is_artificial[tableau.basis[r]]:
            r += 1
            continue
        row = tableau.rows[r]
        column = next(
            (j for j, entry in enumerate(row) if entry and not is_artificial[j]),
            None
        )
        if column is None:
            del tableau.rows[r]
            del tableau.rhs[r]
            del tableau.basis[r]
            continue
        tableau.pivot(r, column)
        r += 1


def verify_witness(problem, witness):
    """Substituição exata de `witness` em todas as restrições"""
    if witness is None or len(witness) != problem.variable_count:
        return False
    witness = [Rational(value) for value in witness]
    return all(constraint.is_satisfied(witness) for constraint in problem.constraints)
