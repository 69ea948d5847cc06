from django.db.models import TextChoices
from django.utils.translation import gettext_lazy as _


class SystemKind(TextChoices):
    GBIT = 'gbit', _('g-bit')
    HYPERCUBE = 'hypercube', _('hypercube')
    CLASSICAL = 'classical', _('classical')
    AMPLIFIED = 'amplified', _('amplified')
    PROJECTED = 'projected', _('projected')
    FILE = 'file', _('file')
