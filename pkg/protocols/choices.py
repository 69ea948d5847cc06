from django.db.models import TextChoices
from django.utils.translation import gettext_lazy as _


class Carrier(TextChoices):
    HYPERCUBE = 'hypercube', _('Hypercube bit com D = n')
    CLASSICAL = 'classical', _('Bit clássico carregando b₁')


class NamedFunction(TextChoices):
    INNER_PRODUCT = 'inner-product', _('Produto interno mod 2')
    EQUALITY = 'equality', _('Igualdade')
    CONSTANT = 'constant', _('Constante 0')
    XOR_FIRST_BITS = 'xor-first', _('XOR dos primeiros bits')
    RANDOM = 'random', _('Tabela aleatória com semente')


class Actor(TextChoices):
    ALICE = 'alice', _('Alice')
    BOB = 'bob', _('Bob')
