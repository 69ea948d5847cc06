"""
Formato texto de tabela-verdade:

    n_alice n_bob
    2^n_alice linhas com 2^n_bob caracteres em {0,1}

Linhas em branco no fim são ignoradas.
"""
from django.core.exceptions import ValidationError
from django.utils.translation import gettext_lazy as _

from core.serializers import read_text
from protocols.models import TruthTable
from protocols.validators import validate_table_caps


def _error(source, line, message, **params):
    return ValidationError(
        _('%(source)s, linha %(line)s: %(message)s'),
        params={'source': source, 'line': line, 'message': message % params if params else message},
        code='parse_error'
    )


def parse_truth_table(text, source='<tabela>'):
    lines = text.rstrip().splitlines()
    if not lines:
        raise _error(source, 1, _('arquivo vazio'))
    header = lines[0].split()
    if len(header) != 2 or not all(part.isdigit() for part in header):
        raise _error(source, 1, _('cabeçalho deve ser "n_alice n_bob"'))
    n_alice, n_bob = int(header[0]), int(header[1])
    validate_table_caps(n_alice, n_bob)
    rows, columns = 2 ** n_alice, 2 ** n_bob
    body = lines[1:]
    if len(body) != rows:
        raise _error(
            source, len(lines) + 1, _('esperadas %(rows)s linhas de valores, há %(given)s'),
            rows=rows, given=len(body)
        )
    values = []
    for offset, line in enumerate(body, start=2):
        line = line.strip()
        if len(line) != columns:
            raise _error(
                source, offset, _('esperados %(columns)s caracteres, há %(given)s'),
                columns=columns, given=len(line)
            )
        bad = next((position for position, ch in enumerate(line, start=1) if ch not in '01'), None)
        if bad is not None:
            raise _error(source, offset, _('caractere inválido na coluna %(column)s'), column=bad)
        values.append(tuple(int(ch) for ch in line))
    return TruthTable(n_alice, n_bob, tuple(values), name=str(source))


def load_truth_table(path):
    return parse_truth_table(read_text(path), source=str(path))


def format_truth_table(table):
    lines = [f'{table.n_alice_bits} {table.n_bob_bits}']
    lines.extend(''.join(str(value) for value in row) for row in table.values)
    return '\n'.join(lines) + '\n'
