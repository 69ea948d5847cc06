"""
Ciclo de apagamento e protocolo de memória do demônio sobre hypercube bits.
"""
import logging

from core.rationals import Rational
from thermo.choices import LedgerOperation
from thermo.dynamics import apply_reversible, post_measurement_state
from thermo.models import DemonReport, EnergyLedger, MemoryState, Readback, ReversibleTransform
from thermo.validators import (
    validate_dimension,
    validate_setting,
    validate_temperature,
    validate_vertex,
)

logger = logging.getLogger(__name__)

# configuração lida no ciclo de apagamento
ERASURE_SETTING = 0


def erasure_cycle(dimension, memory=None, reset_target=None, ledger=None):
    """
    Medir x = 0, apagar o bit do registro clássico e rodar a memória até o
    vértice inicial. Custa 1 unidade de bit qualquer que seja D ou ζ.

    `memory` é alterada no lugar. Devolve (entradas, custo total).
    """
    validate_dimension(dimension)
    if memory is None:
        memory = MemoryState(dimension)
    validate_vertex(memory.zeta, dimension)
    target = tuple(reset_target) if reset_target is not None else (0,) * dimension
    validate_vertex(target, dimension)
    ledger = ledger if ledger is not None else EnergyLedger()
    start = len(ledger)

    outcome, memory.zeta = post_measurement_state(memory.zeta, ERASURE_SETTING)
    memory.zeta = list(memory.zeta)
    memory.classical_register.append(outcome)
    ledger.record(memory.tick(), LedgerOperation.MEASURE, detail=f'x = {ERASURE_SETTING}, a = {outcome}')

    erased = len(memory.classical_register)
    memory.classical_register.clear()
    ledger.record(
        memory.tick(), LedgerOperation.ERASE_REGISTER, Rational(erased),
        detail=f'{erased} bit(s) do registro'
    )

    memory.zeta = list(apply_reversible(memory.zeta, ReversibleTransform.reset(memory.zeta, target)))
    ledger.record(memory.tick(), LedgerOperation.RESET, detail=''.join(map(str, target)))

    entries = ledger.entries[start:]
    total = sum((entry.cost_bits for entry in entries), Rational(0))
    logger.debug('Apagamento D=%d: %d entradas, custo %s', dimension, len(entries), total)
    return entries, total


def demon_protocol(decisions, temperature=None, readback=None):
    """
    O demônio grava a decisão do passo k em ζ_k invertendo esse bit (custo 0)
    e apaga tudo com um único ciclo. `readback` (1-based) mede uma coordenada
    numa cópia da memória antes do apagamento.
    """
    decisions = tuple(decisions)
    dimension = len(decisions)
    validate_dimension(dimension)
    validate_vertex(decisions, dimension)
    validate_temperature(temperature)

    memory = MemoryState(dimension)
    ledger = EnergyLedger()
    for position, decision in enumerate(decisions):
        step = memory.tick()
        if decision:
            memory.zeta = list(apply_reversible(
                memory.zeta, ReversibleTransform.flip(dimension, position)
            ))
        ledger.record(step, LedgerOperation.FLIP, detail=f'ζ_{position + 1} = {memory.zeta[position]}')
    if tuple(memory.zeta) != decisions:
        raise RuntimeError(f'Memória {memory.zeta} não registra as decisões {decisions}')

    retrieved = None
    if readback is not None:
        validate_setting(readback - 1, dimension)
        value, _after = post_measurement_state(memory.copy().zeta, readback - 1)
        retrieved = Readback(k=readback, value=value, expected=decisions[readback - 1])

    _entries, cost = erasure_cycle(dimension, memory=memory, ledger=ledger)
    report = DemonReport(
        dimension=dimension,
        decisions=decisions,
        stored_bits=dimension,
        total_cost_bits=ledger.total_cost,
        landauer_bound_bits=Rational(dimension),
        entries=ledger.entries,
        final_zeta=tuple(memory.zeta),
        readback=retrieved,
        temperature=temperature,
    )
    logger.info(
        'Demônio D=%d: custo %s, Landauer %s, déficit %s',
        dimension, cost, report.landauer_bound_bits, report.deficit_bits
    )
    return report
