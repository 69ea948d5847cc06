from django.db.models import TextChoices
from django.utils.translation import gettext_lazy as _


class BoxKind(TextChoices):
    LOCAL_DETERMINISTIC = 'local_deterministic', _('Local determinística')
    NONLOCAL = 'nonlocal', _('Não local (PR)')
    OTHER = 'other', _('Outra')
