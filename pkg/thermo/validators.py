from django.conf import settings
from django.core.exceptions import ValidationError
from django.utils.translation import gettext_lazy as _

from core.exceptions import ResourceCapExceeded


def validate_dimension(dimension):
    if not isinstance(dimension, int) or isinstance(dimension, bool) or dimension < 1:
        raise ValidationError(
            _('A dimensão D da memória deve ser >= 1 (recebido %(value)s).'),
            params={'value': dimension},
            code='invalid_dimension'
        )
    cap = settings.GPT_LIMITS['DEMON_MAX_D']
    if dimension > cap:
        raise ResourceCapExceeded('D', dimension, cap)


def validate_vertex(zeta, dimension):
    """ζ precisa ser um vértice do hypercube bit de dimensão D"""
    if len(zeta) != dimension:
        raise ValidationError(
            _('O vértice tem %(given)s bits; a memória tem D = %(dimension)s.'),
            params={'given': len(zeta), 'dimension': dimension},
            code='shape_mismatch'
        )
    if any(bit not in (0, 1) for bit in zeta):
        raise ValidationError(_('Um vértice só contém bits 0 e 1.'), code='invalid_bit')


def validate_setting(setting, dimension):
    if not isinstance(setting, int) or isinstance(setting, bool) or not 0 <= setting < dimension:
        raise ValidationError(
            _('Configuração %(setting)s fora do intervalo [0, %(last)s].'),
            params={'setting': setting, 'last': dimension - 1},
            code='invalid_setting'
        )


def validate_permutation(permutation):
    if sorted(permutation) != list(range(len(permutation))):
        raise ValidationError(
            _('%(permutation)s não é uma permutação de 0..%(last)s.'),
            params={'permutation': list(permutation), 'last': len(permutation) - 1},
            code='invalid_permutation'
        )


def validate_cost(operation, cost):
    if cost < 0:
        raise ValidationError(_('Custos são não negativos.'), code='negative_cost')
    if cost and not operation.may_cost:
        raise ValidationError(
            _('A operação %(operation)s não pode ter custo.'),
            params={'operation': operation.value},
            code='costly_operation'
        )


def validate_temperature(temperature):
    if temperature is not None and temperature <= 0:
        raise ValidationError(
            _('A temperatura deve ser positiva (recebido %(value)s K).'),
            params={'value': temperature},
            code='invalid_temperature'
        )
