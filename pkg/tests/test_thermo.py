"""
Testes do app thermo: medição com estado pós-medição, apagamento e memória do demônio
"""
import math

import pytest
from django.core.exceptions import ValidationError

from core.rationals import ONE, ZERO, Rational
from core.utils import all_bit_strings
from thermo.choices import LedgerOperation
from thermo.dynamics import apply_reversible, post_measurement_state
from thermo.erasure import demon_protocol, erasure_cycle
from thermo.models import EnergyLedger, LedgerEntry, MemoryState, ReversibleTransform
from thermo.serializers import DemonReportSerializer
from tests.factories import ReversibleTransformFactory


@pytest.mark.unit
class TestPostMeasurement:
    """Testes da medição de um vértice de hypercube bit"""

    def test_gbit_example(self):
        assert post_measurement_state((1, 1), 0) == (1, (1, 0))

    def test_four_settings_example(self):
        # configuração 1 (0-based) de 1011 vale 0
        assert post_measurement_state((1, 0, 1, 1), 1) == (0, (0, 0, 0, 0))
        assert post_measurement_state((1, 0, 1, 1), 2) == (1, (0, 0, 1, 0))

    @pytest.mark.parametrize('dimension', range(1, 7))
    def test_outcome_is_the_coordinate_and_state_is_stable(self, dimension):
        for zeta in all_bit_strings(dimension):
            for setting in range(dimension):
                outcome, after = post_measurement_state(zeta, setting)
                assert outcome == zeta[setting]
                assert post_measurement_state(after, setting) == (outcome, after)

    def test_setting_out_of_range(self):
        with pytest.raises(ValidationError) as exc:
            post_measurement_state((0, 1), 2)
        assert exc.value.code == 'invalid_setting'


@pytest.mark.unit
class TestReversibleTransform:
    """Testes das transformações reversíveis sobre vértices"""

    def test_flip_and_reset(self):
        assert ReversibleTransform.flip(3, 1).apply((0, 0, 0)) == (0, 1, 0)
        reset = ReversibleTransform.reset((1, 0, 1), (0, 1, 1))
        assert reset.apply((1, 0, 1)) == (0, 1, 1)

    def test_inverse_undoes_transform(self):
        for transform in ReversibleTransformFactory.build_batch(20):
            inverse = transform.inverse()
            assert transform.compose(inverse).is_identity
            assert inverse.compose(transform).is_identity
            for zeta in all_bit_strings(4):
                assert inverse.apply(transform.apply(zeta)) == zeta

    def test_compose_applies_other_first(self):
        first, second = ReversibleTransformFactory.build_batch(2)
        for zeta in all_bit_strings(4):
            assert second.compose(first).apply(zeta) == second.apply(first.apply(zeta))

    def test_transform_permutes_vertices(self):
        transform = ReversibleTransformFactory.build(dimension=5)
        images = {transform.apply(zeta) for zeta in all_bit_strings(5)}
        assert len(images) == 32

    def test_invalid_permutation(self):
        with pytest.raises(ValidationError) as exc:
            ReversibleTransform((0, 0, 2), (0, 0, 0))
        assert exc.value.code == 'invalid_permutation'

    def test_apply_checks_dimension(self):
        with pytest.raises(ValidationError) as exc:
            apply_reversible((0, 1), ReversibleTransform.identity(3))
        assert exc.value.code == 'shape_mismatch'


@pytest.mark.unit
class TestLedger:
    """Testes do livro de energia"""

    def test_only_register_erasure_may_cost(self):
        with pytest.raises(ValidationError) as exc:
            LedgerEntry(1, LedgerOperation.FLIP, ONE)
        assert exc.value.code == 'costly_operation'

    def test_negative_cost(self):
        with pytest.raises(ValidationError) as exc:
            LedgerEntry(1, LedgerOperation.ERASE_REGISTER, -ONE)
        assert exc.value.code == 'negative_cost'

    def test_totals(self):
        ledger = EnergyLedger()
        ledger.record(1, LedgerOperation.MEASURE)
        ledger.record(2, 'erase-register', Rational(2))
        assert len(ledger) == 2
        assert ledger.total_cost == 2
        assert ledger.erased_bits == 2
        assert [entry.operation for entry in ledger] == [
            LedgerOperation.MEASURE, LedgerOperation.ERASE_REGISTER,
        ]

    def test_memory_copy_is_independent(self):
        memory = MemoryState(3, zeta=(1, 0, 1))
        clone = memory.copy()
        clone.zeta[0] = 0
        clone.classical_register.append(1)
        assert memory.zeta == [1, 0, 1]
        assert memory.classical_register == []


@pytest.mark.unit
class TestErasure:
    """Testes do ciclo de apagamento"""

    @pytest.mark.parametrize('dimension', range(1, 9))
    def test_costs_one_bit_from_any_vertex(self, dimension):
        for zeta in all_bit_strings(dimension):
            memory = MemoryState(dimension, zeta=zeta)
            entries, total = erasure_cycle(dimension, memory=memory)
            assert total == ONE
            assert memory.zeta == [0] * dimension
            assert memory.classical_register == []
            assert [entry.operation for entry in entries] == [
                LedgerOperation.MEASURE, LedgerOperation.ERASE_REGISTER, LedgerOperation.RESET,
            ]

    def test_custom_reset_target(self):
        memory = MemoryState(3, zeta=(0, 1, 1))
        _entries, total = erasure_cycle(3, memory=memory, reset_target=(1, 0, 1))
        assert total == ONE
        assert memory.zeta == [1, 0, 1]

    def test_clock_advances_per_step(self):
        memory = MemoryState(2)
        entries, _total = erasure_cycle(2, memory=memory)
        assert [entry.step for entry in entries] == [1, 2, 3]
        assert memory.clock == 3

    def test_invalid_dimension(self):
        with pytest.raises(ValidationError) as exc:
            erasure_cycle(0)
        assert exc.value.code == 'invalid_dimension'

    def test_reset_target_shape(self):
        with pytest.raises(ValidationError) as exc:
            erasure_cycle(3, reset_target=(0, 1))
        assert exc.value.code == 'shape_mismatch'


@pytest.mark.unit
class TestDemon:
    """Testes do protocolo de memória do demônio"""

    def test_eight_decisions(self):
        report = demon_protocol((1, 0, 1, 1, 0, 0, 1, 0))
        assert report.stored_bits == 8
        assert report.total_cost_bits == ONE
        assert report.landauer_bound_bits == 8
        assert report.deficit_bits == 7
        assert report.final_zeta == (0,) * 8
        flips = [entry for entry in report.entries if entry.operation == LedgerOperation.FLIP]
        assert len(flips) == 8
        assert all(entry.cost_bits == ZERO for entry in flips)

    def test_single_decision_has_no_deficit(self):
        report = demon_protocol((1,))
        assert report.deficit_bits == 0

    @pytest.mark.parametrize('dimension', range(1, 9))
    def test_readback_returns_every_decision(self, dimension):
        for decisions in all_bit_strings(dimension):
            for k in range(1, dimension + 1):
                report = demon_protocol(decisions, readback=k)
                assert report.readback.value == decisions[k - 1]
                assert report.readback.matches
                assert report.total_cost_bits == ONE

    def test_readback_out_of_range(self):
        with pytest.raises(ValidationError) as exc:
            demon_protocol((1, 0), readback=3)
        assert exc.value.code == 'invalid_setting'

    def test_energy_in_joules(self, settings):
        report = demon_protocol((1, 0, 1), temperature=300.0)
        unit = settings.BOLTZMANN_CONSTANT * 300.0 * math.log(2)
        assert math.isclose(report.energy_joules, unit)
        assert math.isclose(report.landauer_joules, 3 * unit)

    def test_no_temperature_means_no_joules(self):
        assert demon_protocol((0, 1)).energy_joules is None

    def test_invalid_temperature(self):
        with pytest.raises(ValidationError) as exc:
            demon_protocol((0, 1), temperature=-1.0)
        assert exc.value.code == 'invalid_temperature'

    def test_cap(self, limits):
        limits(DEMON_MAX_D=4)
        with pytest.raises(ValidationError) as exc:
            demon_protocol((0,) * 5)
        assert exc.value.code == 'resource_cap'

    def test_report_serialization(self):
        data = DemonReportSerializer(demon_protocol((1, 1, 0), readback=2)).data
        assert data['D'] == 3
        assert data['decisions'] == '110'
        assert data['total_cost_bits'] == '1'
        assert data['deficit_bits'] == '2'
        assert data['readback'] == {'k': 2, 'value': 1, 'expected': 1, 'matches': True}
        assert data['temperature'] is None
        assert [entry['operation'] for entry in data['ledger']][-3:] == [
            'measure', 'erase-register', 'reset',
        ]
