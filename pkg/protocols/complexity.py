"""
Colapso da complexidade de comunicação: Alice envia um hypercube bit com
ζ_c = f(b, c) e Bob lê f(b, c) medindo a configuração c.
"""
import logging

from core.parallel import run_jobs
from gpt.builders import hypercube_vertex
from protocols.index import CARRIER_MEASUREMENT_DIMENSION
from protocols.information import entropy_capacity
from protocols.models import CcReport
from protocols.validators import validate_table_caps

logger = logging.getLogger(__name__)


def _measure(state, setting):
    distribution = state.distribution(setting)
    return distribution.index(max(distribution))


def _row_job(job):
    """Acertos de Bob para todas as entradas c de uma mesma linha b"""
    row = job
    state = hypercube_vertex(row)
    return sum(1 for c, expected in enumerate(row) if _measure(state, c) == expected)


def cc_protocol(table, jobs=None):
    validate_table_caps(table.n_alice_bits, table.n_bob_bits)
    correct = sum(run_jobs(_row_job, table.values, jobs))
    pairs = table.alice_inputs * table.bob_inputs
    logger.info('%s: %d/%d pares corretos', table.name or 'f', correct, pairs)
    return CcReport(
        function=table.name,
        n_alice_bits=table.n_alice_bits,
        n_bob_bits=table.n_bob_bits,
        hypercube_dimension=table.bob_inputs,
        pairs_checked=pairs,
        correct=correct,
        communication_bits=entropy_capacity(CARRIER_MEASUREMENT_DIMENSION),
    )
