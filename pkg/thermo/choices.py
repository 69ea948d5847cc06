from django.db.models import TextChoices
from django.utils.translation import gettext_lazy as _


class LedgerOperation(TextChoices):
    FLIP = 'flip', _('Inversão condicional de um bit de ζ')
    ROTATE = 'rotate', _('Transformação reversível')
    MEASURE = 'measure', _('Medição de uma configuração')
    ERASE_REGISTER = 'erase-register', _('Apagamento do registro clássico')
    RESET = 'reset', _('Rotação para o vértice inicial')

    @property
    def may_cost(self):
        """Só o apagamento do registro custa trabalho"""
        return self == LedgerOperation.ERASE_REGISTER
