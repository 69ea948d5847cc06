"""
Função índice com um único hypercube bit e a quantidade de causalidade
de informação Σ_j I(b_j : β | k = j), por enumeração exata.
"""
import logging
from collections import defaultdict

from core.rationals import Rational
from core.utils import index_to_bits
from gpt.builders import hypercube_vertex
from protocols.choices import Actor, Carrier
from protocols.information import entropy_capacity, mutual_information
from protocols.models import BitString, IcReport, ProtocolTranscript, TranscriptStep
from protocols.validators import validate_cap, validate_one_based

logger = logging.getLogger(__name__)

# d_m do hypercube bit e do bit clássico (ver o comando dims)
CARRIER_MEASUREMENT_DIMENSION = 2


def index_protocol(b, k):
    """
    Alice prepara o hypercube bit D = n no vértice ζ = b; Bob mede x_k.
    Devolve (β, transcrição), com β = b_k.
    """
    b = b if isinstance(b, BitString) else BitString(tuple(b))
    validate_one_based(k, len(b))
    validate_cap('n', len(b), 'INDEX_MAX_N')
    zeta = b.bits
    setting = k - 1
    distribution = hypercube_vertex(zeta).distribution(setting)
    outcome = distribution.index(max(distribution))
    transcript = ProtocolTranscript(
        zeta=zeta,
        setting=setting,
        outcome=outcome,
        steps=(
            TranscriptStep(Actor.ALICE, 'prepare', f'ζ = {b}'),
            TranscriptStep(Actor.ALICE, 'send', f'hypercube bit D = {len(b)}'),
            TranscriptStep(Actor.BOB, 'measure', f'x = {k}'),
            TranscriptStep(Actor.BOB, 'output', f'β = {outcome}'),
        ),
    )
    return outcome, transcript


def _guesses(carrier, bits):
    """β para cada k = 1..n numa mesma preparação"""
    if carrier == Carrier.HYPERCUBE:
        state = hypercube_vertex(bits)
        return [state.outcomes[setting] for setting in range(len(bits))]
    # o bit clássico leva sempre b₁, qualquer que seja k
    return [bits[0]] * len(bits)


def ic_quantity(n, carrier=Carrier.HYPERCUBE):
    """
    Distribuição conjunta exata de (b_j, β) dado k = j, com b uniforme,
    para cada j; soma das informações mútuas contra H(d_m).
    """
    carrier = Carrier(carrier)
    validate_one_based(n, n, 'n')
    validate_cap('n', n, 'IC_MAX_N')
    weight = Rational(1, 2 ** n)
    joints = [defaultdict(Rational) for _ in range(n)]
    for index in range(2 ** n):
        bits = index_to_bits(index, n)
        for j, guess in enumerate(_guesses(carrier, bits)):
            joints[j][(bits[j], guess)] += weight
    per_index = [mutual_information(dict(joint)) for joint in joints]
    total = sum(per_index)
    capacity = entropy_capacity(CARRIER_MEASUREMENT_DIMENSION)
    logger.info('IC(%s, n=%d): total %.3f, capacidade %.3f', carrier, n, total, capacity)
    return IcReport(
        n=n,
        carrier=carrier,
        per_index=tuple(per_index),
        total=total,
        capacity=capacity,
        measurement_dimension=CARRIER_MEASUREMENT_DIMENSION,
    )
