"""
Testes unitários do núcleo GPT: estados, efeitos, construtores, arquivo de sistema e reetiquetagens
"""
import json

import pytest
from django.core.exceptions import ValidationError

from core.rationals import HALF, ONE, ZERO, Rational
from gpt.builders import GBIT_LABELS, gbit_vertex, hypercube_vertex, make_classical, make_gbit, make_hypercube
from gpt.models import Effect, GptSystem, Measurement, PureStateLabel, State, SystemShape
from gpt.operations import (
    atomic_effect,
    evaluate,
    is_valid_effect,
    is_valid_measurement,
    label_of,
    maximally_mixed,
    measure,
    mix,
    setting_measurement,
    unit_effect,
    vertex_of_label,
)
from gpt.relabeling import automorphisms, find_relabelings
from gpt.serializers import dump_system, load_system, system_digest, system_from_file, system_to_file
from tests.factories import RandomDeterministicSystemFactory, random_weights


@pytest.mark.unit
class TestStates:
    """Testes de formatos e tabelas de estados"""

    def test_shape_offsets(self):
        shape = SystemShape((2, 3))
        assert shape.table_length == 5
        assert shape.index(1, 2) == 4
        assert not shape.is_binary

    def test_shape_requires_two_outcomes(self):
        with pytest.raises(ValidationError) as exc:
            SystemShape((2, 1))
        assert exc.value.code == 'invalid_arity'

    def test_shape_requires_a_setting(self):
        with pytest.raises(ValidationError) as exc:
            SystemShape(())
        assert exc.value.code == 'no_settings'

    def test_state_rejects_unnormalized_table(self):
        with pytest.raises(ValidationError) as exc:
            State(SystemShape.binary(1), ('1/2', '1/3'))
        assert exc.value.code == 'not_normalized'

    def test_state_rejects_negative_entry(self):
        with pytest.raises(ValidationError) as exc:
            State(SystemShape.binary(1), ('-1', '2'))
        assert exc.value.code == 'not_a_probability'

    def test_state_rejects_wrong_length(self):
        with pytest.raises(ValidationError) as exc:
            State(SystemShape.binary(2), ('1', '0'))
        assert exc.value.code == 'table_length'

    def test_deterministic_state_outcomes(self):
        state = hypercube_vertex((1, 0, 1))
        assert state.is_deterministic
        assert state.outcomes == (1, 0, 1)
        assert str(state) == '101'

    def test_duplicate_vertices_rejected(self):
        shape = SystemShape.binary(1)
        vertex = State.deterministic(shape, (0,))
        with pytest.raises(ValidationError) as exc:
            GptSystem(shape, [vertex, vertex])
        assert exc.value.code == 'duplicate_vertex'


@pytest.mark.unit
class TestBuilders:
    """Testes dos sistemas canônicos"""

    def test_gbit_has_four_deterministic_vertices(self, gbit):
        assert gbit.vertex_count == 4
        assert [label_of(v).outcomes for v in gbit.vertices] == list(GBIT_LABELS)

    def test_gbit_vertex_rule(self):
        # a = αx ⊕ β
        assert gbit_vertex(1, 0).outcomes == (0, 1)
        assert gbit_vertex(0, 1).outcomes == (1, 1)
        assert PureStateLabel((0, 1)).gbit_pair == (1, 0)

    @pytest.mark.parametrize('dimension', [1, 2, 3, 5])
    def test_hypercube_vertex_count(self, dimension):
        system = make_hypercube(dimension)
        assert system.vertex_count == 2 ** dimension
        assert system.shape == SystemShape.binary(dimension)

    def test_hypercube_two_has_gbit_vertices(self, gbit):
        assert set(make_hypercube(2).vertices) == set(gbit.vertices)

    def test_classical_simplex(self, classical3):
        assert classical3.shape.arities == (3,)
        assert classical3.vertex_count == 3

    @pytest.mark.parametrize('builder, value', [(make_hypercube, 0), (make_classical, 1)])
    def test_invalid_dimensions(self, builder, value):
        with pytest.raises(ValidationError) as exc:
            builder(value)
        assert exc.value.code == 'invalid_dimension'


@pytest.mark.unit
class TestEffects:
    """Testes de efeitos, medições e misturas"""

    def test_atomic_effect_reads_probability(self, gbit):
        effect = atomic_effect(gbit.shape, 1, 1)
        assert [effect(v) for v in gbit.vertices] == [ZERO, ZERO, ONE, ONE]

    def test_unit_effect_is_one_everywhere(self, triangle):
        effect = unit_effect(triangle.shape)
        assert all(effect(v) == ONE for v in triangle.vertices)

    def test_complement_sums_to_unit(self, gbit):
        effect = atomic_effect(gbit.shape, 0, 1)
        for vertex in gbit.vertices:
            assert effect(vertex) + effect.complement()(vertex) == ONE

    def test_setting_measurement_is_valid(self, hypercube3):
        measurement = setting_measurement(hypercube3.shape, 2)
        assert is_valid_measurement(measurement, hypercube3)

    def test_effect_outside_unit_interval_is_invalid(self, gbit):
        effect = Effect(gbit.shape, (2, 0, 0, 0), -1)
        assert not is_valid_effect(effect, gbit)

    def test_incomplete_measurement_is_invalid(self, gbit):
        measurement = Measurement((atomic_effect(gbit.shape, 0, 0),))
        assert not is_valid_measurement(measurement, gbit)

    @pytest.mark.parametrize('fixture', ['gbit', 'hypercube3', 'classical3', 'triangle'])
    def test_probabilities_on_random_mixtures(self, fixture, request):
        system = request.getfixturevalue(fixture)
        shape = system.shape
        atomics = [
            atomic_effect(shape, setting, outcome)
            for setting in range(shape.settings_count)
            for outcome in range(shape.arities[setting])
        ]
        blended = Effect(
            shape,
            tuple((a + b) / 2 for a, b in zip(atomics[0].coefficients, atomics[-1].coefficients)),
            ZERO
        )
        effects = atomics + [effect.complement() for effect in atomics] + [blended, unit_effect(shape)]
        measurements = [setting_measurement(shape, x) for x in range(shape.settings_count)]
        measurements.append(Measurement((blended, blended.complement())))
        assert all(is_valid_effect(effect, system) for effect in effects)
        assert all(is_valid_measurement(measurement, system) for measurement in measurements)

        for _ in range(30):
            state = mix(system.vertices, random_weights(system.vertex_count))
            for effect in effects:
                assert ZERO <= evaluate(effect, state) <= ONE
            for measurement in measurements:
                assert sum(measurement.probabilities(state), ZERO) == ONE

    def test_maximally_mixed_gbit(self, gbit):
        state = maximally_mixed(gbit)
        assert state.table == (HALF,) * 4
        assert label_of(state) is None

    def test_mix_rejects_bad_weights(self, gbit):
        with pytest.raises(ValidationError) as exc:
            mix(gbit.vertices[:2], [HALF, Rational(1, 3)])
        assert exc.value.code == 'weights_not_normalized'

    def test_measure_distribution(self, triangle):
        assert measure(triangle.vertices[2], 0) == (HALF, HALF)

    def test_vertex_of_label(self, hypercube3):
        assert vertex_of_label(hypercube3, (1, 1, 0)) == 6
        with pytest.raises(ValidationError) as exc:
            vertex_of_label(make_gbit(), (1, 1, 1))
        assert exc.value.code == 'shape_mismatch'

    def test_unknown_vertex_label(self):
        system = GptSystem(SystemShape.binary(1), [State.deterministic(SystemShape.binary(1), (0,))])
        with pytest.raises(ValidationError) as exc:
            vertex_of_label(system, (1,))
        assert exc.value.code == 'unknown_vertex'


@pytest.mark.unit
class TestSystemFile:
    """Testes do arquivo de sistema"""

    @pytest.mark.parametrize('system', [make_gbit(), make_hypercube(3), make_classical(4)])
    def test_builder_round_trip(self, system):
        assert system_from_file(system_to_file(system)) == system

    def test_mixed_vertex_round_trip(self, triangle):
        data = system_to_file(triangle)
        assert data['vertices'][2] == ['1/2', '1/2', '0', '1']
        assert system_from_file(data) == triangle

    def test_random_systems_round_trip(self):
        for system in RandomDeterministicSystemFactory.build_batch(10):
            assert system_from_file(json.loads(dump_system(system))) == system

    def test_load_from_disk(self, gbit_file, gbit):
        assert load_system(gbit_file) == gbit

    def test_redundant_vertex_rejected(self, gbit):
        data = system_to_file(gbit)
        data['vertices'].append(['1/2', '1/2', '1/2', '1/2'])
        with pytest.raises(ValidationError) as exc:
            system_from_file(data)
        assert 'combinação convexa' in str(exc.value)

    def test_unnormalized_vertex_names_position(self, gbit):
        data = system_to_file(gbit)
        data['vertices'][1] = ['1', '1', '1', '0']
        with pytest.raises(ValidationError) as exc:
            system_from_file(data)
        assert 'vértice 1' in str(exc.value)

    def test_decimal_entries_rejected(self, gbit):
        data = system_to_file(gbit)
        data['vertices'][0][0] = '0.5'
        with pytest.raises(ValidationError):
            system_from_file(data)

    def test_malformed_json_reports_position(self, tmp_path):
        path = tmp_path / 'broken.json'
        path.write_text('{"name": "x",\n "vertices": [}', encoding='utf-8')
        with pytest.raises(ValidationError) as exc:
            load_system(path)
        assert exc.value.code == 'parse_error'
        assert exc.value.params['line'] == 2

    def test_missing_file(self, tmp_path):
        with pytest.raises(ValidationError) as exc:
            load_system(tmp_path / 'nada.json')
        assert exc.value.code == 'unreadable_file'

    def test_digest_is_stable(self, gbit):
        assert system_digest(gbit) == system_digest(make_gbit())
        assert system_digest(gbit) != system_digest(make_hypercube(3))


@pytest.mark.unit
class TestRelabeling:
    """Testes de reetiquetagens e automorfismos"""

    def test_gbit_symmetry_group_is_dihedral(self, gbit):
        assert len(automorphisms(gbit, cap=100)) == 8

    def test_hypercube_symmetry_group(self, hypercube3):
        # 3! permutações de configurações × 2^3 inversões de resultados
        assert len(automorphisms(hypercube3, cap=100)) == 48

    def test_automorphism_cap(self, hypercube3):
        with pytest.raises(ValidationError) as exc:
            automorphisms(hypercube3, cap=10)
        assert exc.value.code == 'resource_cap'

    def test_relabeling_maps_vertices(self, gbit):
        for relabeling in find_relabelings(gbit, gbit):
            for index, vertex in enumerate(gbit.vertices):
                image = relabeling.apply(vertex, gbit.shape)
                assert gbit.vertices[relabeling.vertex_map[index]] == image

    def test_different_sizes_have_no_relabeling(self, gbit, hypercube3):
        assert next(find_relabelings(gbit, hypercube3), None) is None
