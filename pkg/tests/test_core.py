"""
Testes unitários do app core: racionais, utilitários, erros e paralelismo
"""
import pytest
from django.core.exceptions import ValidationError

from core.exceptions import ResourceCapExceeded, first_message
from core.management.base import limits_overridden, parse_limits
from core.parallel import run_jobs
from core.rationals import HALF, Rational, format_rational, parse_rational
from core.serializers import BitStringField, RationalField, parse_json
from core.utils import all_bit_strings, bits_to_index, canonical_json, digest, index_to_bits, xor_all


def _square(value):
    return value * value


@pytest.mark.unit
class TestRationals:
    """Testes do formato textual de racionais"""

    def test_parse_fraction_and_integer(self):
        assert parse_rational('1/2') == HALF
        assert parse_rational('-3/6') == Rational(-1, 2)
        assert parse_rational('4') == 4
        assert parse_rational(7) == 7

    def test_parse_rejects_decimals_and_zero_denominator(self):
        for text in ['0.5', '1/0', 'abc', '', '1/-2']:
            with pytest.raises(ValidationError) as exc:
                parse_rational(text)
            assert exc.value.code == 'invalid_rational'

    def test_format_is_canonical(self):
        assert format_rational(Rational(2, 4)) == '1/2'
        assert format_rational(Rational(6, 3)) == '2'
        assert format_rational(Rational(-1, 3)) == '-1/3'

    def test_rational_field_round_trip(self):
        field = RationalField()
        assert field.to_internal_value('3/9') == Rational(1, 3)
        assert field.to_representation(Rational(1, 3)) == '1/3'

    def test_bit_string_field(self):
        field = BitStringField()
        assert field.to_internal_value('1011') == (1, 0, 1, 1)
        assert field.to_representation((0, 1)) == '01'


@pytest.mark.unit
class TestUtils:
    """Testes dos utilitários de bits e JSON canônico"""

    def test_bits_to_index_most_significant_first(self):
        assert bits_to_index((1, 0, 1)) == 5
        assert index_to_bits(5, 3) == (1, 0, 1)

    def test_index_round_trip(self):
        for index in range(16):
            assert bits_to_index(index_to_bits(index, 4)) == index

    def test_all_bit_strings_lexicographic(self):
        assert all_bit_strings(2) == [(0, 0), (0, 1), (1, 0), (1, 1)]

    def test_xor_all(self):
        assert xor_all([1, 1, 1]) == 1
        assert xor_all([]) == 0

    def test_canonical_json_is_order_independent(self):
        first = canonical_json({'b': 1, 'a': [1, 2]})
        second = canonical_json({'a': [1, 2], 'b': 1})
        assert first == second
        assert first.endswith('\n')

    def test_digest_depends_on_content_only(self):
        assert digest({'x': 1, 'y': 2}) == digest({'y': 2, 'x': 1})
        assert digest({'x': 1}) != digest({'x': 2})


@pytest.mark.unit
class TestErrors:
    """Testes das exceções e do parse de JSON"""

    def test_resource_cap_message_names_values(self):
        error = ResourceCapExceeded('D', 100, 64)
        assert error.code == 'resource_cap'
        message = first_message(error)
        assert '100' in message and '64' in message

    def test_parse_json_reports_line_and_column(self):
        with pytest.raises(ValidationError) as exc:
            parse_json('{\n  "name": \n}', source='x.json')
        assert exc.value.code == 'parse_error'
        assert exc.value.params['line'] == 3

    def test_parse_limits(self):
        assert parse_limits(['demon_max_d=128']) == {'DEMON_MAX_D': 128}

    def test_parse_limits_rejects_unknown_key(self):
        with pytest.raises(ValidationError) as exc:
            parse_limits(['NOPE=1'])
        assert exc.value.code == 'unknown_limit'

    def test_parse_limits_rejects_non_integer(self):
        with pytest.raises(ValidationError) as exc:
            parse_limits(['DEMON_MAX_D=muito'])
        assert exc.value.code == 'invalid_limit'

    def test_limits_are_restored(self, settings):
        original = settings.GPT_LIMITS['DEMON_MAX_D']
        with limits_overridden({'DEMON_MAX_D': 3}):
            assert settings.GPT_LIMITS['DEMON_MAX_D'] == 3
        assert settings.GPT_LIMITS['DEMON_MAX_D'] == original


@pytest.mark.unit
class TestRunJobs:
    """Testes da execução em lote"""

    def test_sequential_preserves_order(self):
        assert run_jobs(_square, [3, 1, 2], jobs=1) == [9, 1, 4]

    @pytest.mark.slow
    def test_parallel_matches_sequential(self):
        items = list(range(40))
        assert run_jobs(_square, items, jobs=2, chunksize=4) == run_jobs(_square, items, jobs=1)
