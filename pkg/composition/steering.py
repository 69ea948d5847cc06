import logging

from django.core.exceptions import ValidationError
from django.utils.translation import gettext_lazy as _

from composition.boxes import marginal
from core.rationals import ZERO
from gpt.models import State
from gpt.validators import validate_same_shape
from lp.polytope import in_convex_hull

logger = logging.getLogger(__name__)


def conditional_state(box, party, setting, outcome, other):
    """
    Estado da parte `other` após a parte `party` obter `outcome` em
    `setting`; None se esse resultado tem probabilidade zero.
    """
    pair = marginal(box, (party, other))
    weight = sum(
        (pair.probability((setting, 0), (outcome, b)) for b in range(box.outcomes)),
        ZERO
    )
    if weight == ZERO:
        return None
    table = [
        pair.probability((setting, y), (outcome, b)) / weight
        for y in range(box.settings)
        for b in range(box.outcomes)
    ]
    return State(box.party_shape, tuple(table))


def steering_check(box, system):
    """
    Verdadeiro se todo resultado local com probabilidade não nula prepara,
    em cada outra parte, um estado dentro do politopo de `system`.
    """
    validate_same_shape(system.shape, box.party_shape)
    if box.parties < 2:
        raise ValidationError(
            _('Steering exige pelo menos 2 partes (recebido %(parties)s).'),
            params={'parties': box.parties},
            code='not_multipartite'
        )
    vertex_set = set(system.vertices)
    for party in range(box.parties):
        for setting in range(box.settings):
            for outcome in range(box.outcomes):
                for other in range(box.parties):
                    if other == party:
                        continue
                    state = conditional_state(box, party, setting, outcome, other)
                    if state is None or state in vertex_set:
                        continue
                    if in_convex_hull(state, system.vertices) is None:
                        logger.debug(
                            'Parte %d em x=%d, a=%d prepara estado fora do politopo',
                            party, setting, outcome
                        )
                        return False
    return True
