"""Tabelas-verdade nomeadas usadas nas verificações de complexidade de comunicação."""
import random

from core.utils import index_to_bits
from protocols.models import TruthTable
from protocols.validators import validate_table_caps


def _tabulate(n_alice, n_bob, function, name):
    validate_table_caps(n_alice, n_bob)
    values = tuple(
        tuple(
            function(index_to_bits(b, n_alice), index_to_bits(c, n_bob))
            for c in range(2 ** n_bob)
        )
        for b in range(2 ** n_alice)
    )
    return TruthTable(n_alice, n_bob, values, name=name)


def inner_product(n):
    """f(b, c) = b · c mod 2"""
    return _tabulate(n, n, lambda b, c: sum(x & y for x, y in zip(b, c)) % 2, f'inner-product({n})')


def equality(n):
    return _tabulate(n, n, lambda b, c: int(b == c), f'equality({n})')


def constant(n_alice, n_bob, value=0):
    return _tabulate(n_alice, n_bob, lambda b, c: value, f'constant({value})')


def xor_first_bits(n_alice, n_bob):
    """f(b, c) = b₁ ⊕ c₁; sem entrada de Bob vale b₁"""
    return _tabulate(
        n_alice, n_bob,
        lambda b, c: (b[0] if b else 0) ^ (c[0] if c else 0),
        'xor-first'
    )


def random_table(n_alice, n_bob, seed):
    validate_table_caps(n_alice, n_bob)
    rng = random.Random(seed)
    values = tuple(
        tuple(rng.randrange(2) for _ in range(2 ** n_bob))
        for _ in range(2 ** n_alice)
    )
    return TruthTable(n_alice, n_bob, values, name=f'random(seed={seed})')
