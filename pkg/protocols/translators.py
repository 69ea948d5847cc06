"""
Tradutores entre um hypercube bit e um bit clássico assistido por caixas PR.
"""
from collections import defaultdict
from itertools import product

from django.conf import settings
from django.core.exceptions import ValidationError
from django.utils.translation import gettext_lazy as _

from composition.boxes import box_from_label
from core.exceptions import ResourceCapExceeded
from core.rationals import ONE, Rational
from core.utils import xor_all
from gpt.builders import hypercube_vertex
from protocols.choices import Actor
from protocols.models import BitString, PrBoxSimulation, ProtocolTranscript, TranscriptStep
from protocols.validators import validate_one_based

# a₁ ⊕ a₂ = x₁x₂
PR_BOX = box_from_label(1, 0, 0, 0)


def _support(box, x, y):
    """Pares (a, b) com probabilidade não nula e o peso de cada um"""
    return [
        ((a, b), box.probability((x, y), (a, b)))
        for a, b in product((0, 1), repeat=2)
        if box.probability((x, y), (a, b))
    ]


def simulate_hypercube_with_prboxes(zeta, k):
    """
    Alice põe ζ_i na caixa i e envia c = ⊕ a_i; Bob põe 1 só na caixa k e
    devolve c ⊕ b₁ ⊕ … ⊕ b_D. Enumera todas as saídas internas das caixas.
    """
    zeta = zeta if isinstance(zeta, BitString) else BitString(tuple(zeta))
    dimension = len(zeta)
    validate_one_based(k, dimension)
    cap = settings.GPT_LIMITS['PRBOX_MAX_D']
    if dimension > cap:
        raise ResourceCapExceeded('D', dimension, cap)

    supports = [
        _support(PR_BOX, bit, int(position == k - 1))
        for position, bit in enumerate(zeta.bits)
    ]
    distribution = defaultdict(Rational)
    assignments = 0
    for choice in product(*supports):
        weight = ONE
        for _pair, probability in choice:
            weight *= probability
        message = xor_all(a for (a, _b), _p in choice)
        output = message ^ xor_all(b for (_a, b), _p in choice)
        distribution[output] += weight
        assignments += 1
    return PrBoxSimulation(
        zeta=zeta.bits,
        setting=k - 1,
        distribution=(distribution[0], distribution[1]),
        assignments=assignments,
        boxes_used=dimension,
        message_bits=1,
    )


def simulate_prboxes_with_hypercube(table, b, c=None):
    """
    Alice prepara o hypercube bit D = |Y| com ζ_i = f(b, i); Bob mede a
    configuração c e obtém f(b, c). Devolve (bit, transcrição).
    """
    b = b if isinstance(b, BitString) else BitString.parse(b)
    if len(b) != table.n_alice_bits:
        raise ValidationError(
            _('b tem %(given)s bits; a tabela espera %(expected)s.'),
            params={'given': len(b), 'expected': table.n_alice_bits},
            code='shape_mismatch'
        )
    if table.n_bob_bits:
        c = c if isinstance(c, BitString) else BitString.parse(c)
        if len(c) != table.n_bob_bits:
            raise ValidationError(
                _('c tem %(given)s bits; a tabela espera %(expected)s.'),
                params={'given': len(c), 'expected': table.n_bob_bits},
                code='shape_mismatch'
            )
        setting = c.index
    else:
        setting = 0
    zeta = table.row(b)
    distribution = hypercube_vertex(zeta).distribution(setting)
    outcome = distribution.index(max(distribution))
    transcript = ProtocolTranscript(
        zeta=zeta,
        setting=setting,
        outcome=outcome,
        steps=(
            TranscriptStep(Actor.ALICE, 'tabulate', f'ζ_i = f({b}, i)'),
            TranscriptStep(Actor.ALICE, 'send', f'hypercube bit D = {len(zeta)}'),
            TranscriptStep(Actor.BOB, 'measure', f'x = {setting + 1}'),
            TranscriptStep(Actor.BOB, 'output', f'f = {outcome}'),
        ),
    )
    return outcome, transcript
