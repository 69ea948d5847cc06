"""
Informação em bits a partir de distribuições racionais exatas.

As probabilidades ficam racionais até o logaritmo; 0 · log 0 = 0.
"""
import math
from collections import defaultdict

from django.core.exceptions import ValidationError
from django.utils.translation import gettext_lazy as _

from core.rationals import ONE, ZERO, Rational


def entropy_capacity(dimension):
    """H(d) = log₂ d"""
    if not isinstance(dimension, int) or dimension < 2:
        raise ValidationError(
            _('A capacidade exige d >= 2 (recebido %(value)s).'),
            params={'value': dimension},
            code='invalid_dimension'
        )
    return math.log2(dimension)


def validate_distribution(joint):
    if any(Rational(p) < ZERO for p in joint.values()):
        raise ValidationError(_('Probabilidades negativas na distribuição.'), code='not_a_probability')
    total = sum((Rational(p) for p in joint.values()), ZERO)
    if total != ONE:
        raise ValidationError(
            _('A distribuição soma %(total)s, não 1.'),
            params={'total': total},
            code='not_normalized'
        )


def mutual_information(joint):
    """I(X:Y) em bits para `joint` = {(x, y): P(x, y)}"""
    validate_distribution(joint)
    left, right = defaultdict(Rational), defaultdict(Rational)
    for (x, y), p in joint.items():
        left[x] += p
        right[y] += p
    information = 0.0
    for (x, y), p in joint.items():
        if p:
            information += float(p) * math.log2(p / (left[x] * right[y]))
    return information
