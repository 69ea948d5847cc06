from django.db.models import TextChoices
from django.utils.translation import gettext_lazy as _


class Relation(TextChoices):
    LESS_EQUAL = '<=', _('menor ou igual')
    EQUAL = '=', _('igual')
    GREATER_EQUAL = '>=', _('maior ou igual')


class LpStatus(TextChoices):
    FEASIBLE = 'feasible', _('Viável')
    INFEASIBLE = 'infeasible', _('Inviável')
    UNBOUNDED = 'unbounded', _('Ilimitado')
