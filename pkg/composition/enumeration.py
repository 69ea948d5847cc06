import logging

from composition.models import NsBox
from composition.validators import no_signaling_rows, normalization_rows
from core.rationals import ONE, ZERO
from lp.polytope import enumerate_vertices

logger = logging.getLogger(__name__)


def no_signaling_vertices(parties=2, settings=2, outcomes=2, jobs=None):
    """
    Vértices do politopo {P >= 0, normalização, não sinalização}, em ordem
    lexicográfica das tabelas.
    """
    equalities = normalization_rows(parties, settings, outcomes)
    equalities += no_signaling_rows(parties, settings, outcomes)
    width = (settings * outcomes) ** parties
    inequalities = []
    for position in range(width):
        row = [ZERO] * width
        row[position] = ONE
        inequalities.append((tuple(row), ZERO))
    points = enumerate_vertices(equalities, inequalities, jobs)
    logger.info('Politopo NS (%d, %d, %d): %d vértices', parties, settings, outcomes, len(points))
    return [NsBox(parties, settings, outcomes, point) for point in points]


def maximal_tensor_gbits(jobs=None):
    """Os 24 estados puros do produto tensorial maximal de dois g-bits"""
    return no_signaling_vertices(2, 2, 2, jobs)
