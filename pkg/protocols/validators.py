from django.conf import settings
from django.core.exceptions import ValidationError
from django.utils.translation import gettext_lazy as _

from core.exceptions import ResourceCapExceeded


def validate_bits(bits):
    if not bits:
        raise ValidationError(_('A cadeia de bits não pode ser vazia.'), code='empty_bits')
    for position, bit in enumerate(bits):
        if bit not in (0, 1):
            raise ValidationError(
                _('Posição %(position)s contém %(bit)s; só 0 e 1 são bits.'),
                params={'position': position + 1, 'bit': bit},
                code='invalid_bit'
            )


def validate_one_based(k, n, name='k'):
    """1 <= k <= n"""
    if not isinstance(k, int) or isinstance(k, bool) or not 1 <= k <= n:
        raise ValidationError(
            _('%(name)s = %(value)s fora do intervalo [1, %(n)s].'),
            params={'name': name, 'value': k, 'n': n},
            code='invalid_index'
        )


def validate_cap(what, value, key):
    cap = settings.GPT_LIMITS[key]
    if value > cap:
        raise ResourceCapExceeded(what, value, cap)


def validate_table_caps(n_alice_bits, n_bob_bits):
    validate_cap(_('Bits de entrada de Alice'), n_alice_bits, 'TRUTH_TABLE_MAX_ALICE_BITS')
    validate_cap(_('Bits de entrada de Bob'), n_bob_bits, 'TRUTH_TABLE_MAX_BOB_BITS')
