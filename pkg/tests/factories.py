"""
Factories para criação de objetos de teste usando factory_boy
"""
from itertools import product

import factory
from faker import Faker

from core.rationals import Rational
from gpt.models import GptSystem, State, SystemShape
from lp.choices import Relation
from lp.models import LinearConstraint, LpProblem
from protocols.models import BitString, TruthTable
from thermo.models import ReversibleTransform


fake = Faker('pt_BR')
fake.seed_instance(20240617)


def _random_labels(shape, limit=8):
    """Rótulos determinísticos distintos sorteados entre todos os do formato"""
    labels = list(product(*(range(arity) for arity in shape.arities)))
    count = fake.random_int(min=1, max=min(len(labels), limit))
    chosen = fake.random_elements(elements=labels, length=count, unique=True)
    return [State.deterministic(shape, label) for label in sorted(chosen)]


def random_weights(count):
    """Pesos racionais positivos sorteados que somam exatamente 1"""
    numerators = [fake.random_int(min=1, max=97) for _ in range(count)]
    total = sum(numerators)
    return [Rational(numerator, total) for numerator in numerators]


class SystemShapeFactory(factory.Factory):
    """Factory para SystemShape com 1 a 3 configurações de 2 ou 3 resultados"""

    class Meta:
        model = SystemShape

    arities = factory.LazyFunction(
        lambda: tuple(fake.random_int(min=2, max=3) for _ in range(fake.random_int(min=1, max=3)))
    )


class RandomDeterministicSystemFactory(factory.Factory):
    """Sistema com vértices determinísticos sorteados (tabelas aleatórias sobre formatos aleatórios)"""

    class Meta:
        model = GptSystem

    shape = factory.SubFactory(SystemShapeFactory)
    vertices = factory.LazyAttribute(lambda obj: _random_labels(obj.shape))
    name = factory.Sequence(lambda n: f'aleatorio-{n}')


class BitStringFactory(factory.Factory):
    """Factory para BitString"""

    class Meta:
        model = BitString

    class Params:
        length = 8

    bits = factory.LazyAttribute(lambda obj: tuple(fake.random_int(0, 1) for _ in range(obj.length)))


class TruthTableFactory(factory.Factory):
    """Tabela-verdade aleatória com n_bob <= 4"""

    class Meta:
        model = TruthTable

    n_alice_bits = factory.LazyFunction(lambda: fake.random_int(min=0, max=3))
    n_bob_bits = factory.LazyFunction(lambda: fake.random_int(min=1, max=4))
    values = factory.LazyAttribute(
        lambda obj: tuple(
            tuple(fake.random_int(0, 1) for _ in range(2 ** obj.n_bob_bits))
            for _ in range(2 ** obj.n_alice_bits)
        )
    )
    name = factory.Sequence(lambda n: f'tabela-{n}')


class ReversibleTransformFactory(factory.Factory):
    """Transformação reversível aleatória sobre D configurações"""

    class Meta:
        model = ReversibleTransform

    class Params:
        dimension = 4

    permutation = factory.LazyAttribute(
        lambda obj: tuple(fake.random_sample(elements=range(obj.dimension), length=obj.dimension))
    )
    mask = factory.LazyAttribute(lambda obj: tuple(fake.random_int(0, 1) for _ in range(obj.dimension)))


class BoundedLpFactory(factory.Factory):
    """
    LP pequeno com caixa -5 <= x_k <= 5 (região limitada) e restrições
    aleatórias de coeficientes inteiros.
    """

    class Meta:
        model = LpProblem

    class Params:
        extra = 3

    variable_count = factory.LazyFunction(lambda: fake.random_int(min=2, max=4))
    constraints = factory.LazyAttribute(lambda obj: _random_constraints(obj.variable_count, obj.extra))
    objective = factory.LazyAttribute(
        lambda obj: tuple(Rational(fake.random_int(-3, 3)) for _ in range(obj.variable_count))
    )


def _random_constraints(count, extra):
    constraints = []
    for k in range(count):
        unit = [0] * count
        unit[k] = 1
        constraints.append(LinearConstraint(tuple(unit), Relation.LESS_EQUAL, 5))
        constraints.append(LinearConstraint(tuple(unit), Relation.GREATER_EQUAL, -5))
    for _ in range(extra):
        constraints.append(LinearConstraint(
            tuple(fake.random_int(-3, 3) for _ in range(count)),
            fake.random_element(elements=list(Relation)),
            fake.random_int(-6, 6)
        ))
    return tuple(constraints)
