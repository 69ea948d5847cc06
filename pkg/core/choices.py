from django.db.models import IntegerChoices
from django.utils.translation import gettext_lazy as _


class ExitCode(IntegerChoices):
    SUCCESS = 0, _('Sucesso')
    INVALID_INPUT = 2, _('Entrada inválida ou invariante violada')
    RESOURCE_CAP = 3, _('Limite de recursos excedido')


# verbosity do Django (0..3) -> nível dos loggers dos apps
VERBOSITY_LOG_LEVELS = {
    0: 'ERROR',
    1: 'WARNING',
    2: 'INFO',
    3: 'DEBUG',
}
