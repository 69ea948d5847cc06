"""
Racionais exatos usados em toda a geometria e nos programas lineares.

`Rational` é `fractions.Fraction`: sempre em termos mínimos com denominador
positivo. A forma textual canônica é "p/q", ou "p" quando q = 1.
"""
import re
from collections.abc import Iterable
from fractions import Fraction

from django.core.exceptions import ValidationError
from django.utils.translation import gettext_lazy as _

Rational = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)
HALF = Fraction(1, 2)

RATIONAL_PATTERN = re.compile(r'^-?\d+(/[1-9]\d*)?$')


def parse_rational(text):
    """
    Converte "p/q" ou um inteiro em `Rational`.

    Decimais ("0.5") são recusados: o formato de arquivo só aceita
    frações exatas.
    """
    if isinstance(text, Fraction):
        return text
    if isinstance(text, int) and not isinstance(text, bool):
        return Fraction(text)
    if not isinstance(text, str) or not RATIONAL_PATTERN.match(text.strip()):
        raise ValidationError(
            _('%(value)s não é um racional válido. Use "p/q" ou um inteiro.'),
            params={'value': repr(text)},
            code='invalid_rational'
        )
    return Fraction(text.strip())


def format_rational(value):
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f'{value.numerator}/{value.denominator}'


def as_rationals(values: Iterable) -> tuple[Fraction, ...]:
    return tuple(parse_rational(v) for v in values)


def dot(left, right):
    return sum((a * b for a, b in zip(left, right, strict=True)), ZERO)
