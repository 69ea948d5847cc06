from django.core.exceptions import ValidationError
from django.utils.translation import gettext_lazy as _


class ResourceCapExceeded(ValidationError):
    """
    Pedido recusado por ultrapassar um limite configurado (GPT_LIMITS).

    Nunca truncamos em silêncio: o limite e o valor pedido vão na mensagem.
    """

    def __init__(self, what, requested, cap):
        super().__init__(
            _('%(what)s excede o limite configurado: %(requested)s > %(cap)s'),
            params={'what': what, 'requested': requested, 'cap': cap},
            code='resource_cap'
        )
        self.what = what
        self.requested = requested
        self.cap = cap


def first_message(error):
    """Texto da primeira mensagem de um ValidationError (para a CLI)."""
    if hasattr(error, 'message_dict'):
        field, messages = next(iter(error.message_dict.items()))
        return f'{field}: {messages[0]}'
    return error.messages[0]
