from dataclasses import dataclass

from django.core.exceptions import ValidationError
from django.utils.translation import gettext_lazy as _

from core.rationals import Rational, as_rationals
from lp.choices import LpStatus, Relation


@dataclass(frozen=True)
class LinearConstraint:
    """Σ coefficients · x  (<=, =, >=)  rhs"""
    coefficients: tuple[Rational, ...]
    relation: Relation
    rhs: Rational

    def __post_init__(self):
        object.__setattr__(self, 'coefficients', as_rationals(self.coefficients))
        object.__setattr__(self, 'relation', Relation(self.relation))
        object.__setattr__(self, 'rhs', Rational(self.rhs))

    @classmethod
    def lower_bound(cls, variable_count, variable, bound=0):
        """x_variable >= bound"""
        coefficients = [0] * variable_count
        coefficients[variable] = 1
        return cls(tuple(coefficients), Relation.GREATER_EQUAL, bound)

    def lhs(self, point):
        return sum((c * x for c, x in zip(self.coefficients, point)), Rational(0))

    def is_satisfied(self, point):
        value = self.lhs(point)
        if self.relation == Relation.LESS_EQUAL:
            return value <= self.rhs
        if self.relation == Relation.GREATER_EQUAL:
            return value >= self.rhs
        return value == self.rhs


@dataclass(frozen=True)
class LpProblem:
    """
    Variáveis livres, a menos que restritas. Com `objective`, maximiza
    objective · x; sem ele, só decide viabilidade (fase 1).
    """
    variable_count: int
    constraints: tuple[LinearConstraint, ...]
    objective: tuple[Rational, ...] | None = None

    def __post_init__(self):
        object.__setattr__(self, 'constraints', tuple(self.constraints))
        if self.objective is not None:
            object.__setattr__(self, 'objective', as_rationals(self.objective))
            if len(self.objective) != self.variable_count:
                raise ValidationError(
                    _('Objetivo com %(length)s coeficientes para %(count)s variáveis.'),
                    params={'length': len(self.objective), 'count': self.variable_count},
                    code='dimension_mismatch'
                )
        for position, constraint in enumerate(self.constraints):
            if len(constraint.coefficients) != self.variable_count:
                raise ValidationError(
                    _('Restrição %(position)s tem %(length)s coeficientes para %(count)s variáveis.'),
                    params={
                        'position': position,
                        'length': len(constraint.coefficients),
                        'count': self.variable_count,
                    },
                    code='dimension_mismatch'
                )


@dataclass(frozen=True)
class LpOutcome:
    status: LpStatus
    witness: tuple[Rational, ...] | None = None
    optimum: Rational | None = None

    @property
    def is_feasible(self):
        return self.status != LpStatus.INFEASIBLE
