"""
Fixtures compartilhadas para todos os testes
"""
import json
from io import StringIO

import pytest
from django.core.management import call_command

from composition.projection import amplify
from gpt.builders import make_classical, make_gbit, make_hypercube
from gpt.models import GptSystem, State, SystemShape
from gpt.serializers import dump_system
from protocols.functions import inner_product
from protocols.parsers import format_truth_table


@pytest.fixture
def gbit():
    """g-bit: quadrado com 4 estados puros"""
    return make_gbit()


@pytest.fixture
def hypercube3():
    """Hypercube bit com D = 3"""
    return make_hypercube(3)


@pytest.fixture
def classical3():
    """Trit clássico"""
    return make_classical(3)


@pytest.fixture
def triangle():
    """
    Triângulo dentro do quadrado: dois vértices determinísticos e um
    vértice misto (x=0 uniforme, x=1 com resultado 1).
    """
    shape = SystemShape.binary(2)
    vertices = [
        State.deterministic(shape, (0, 0)),
        State.deterministic(shape, (1, 0)),
        State(shape, ('1/2', '1/2', '0', '1')),
    ]
    return GptSystem(shape, vertices, name='triangulo')


@pytest.fixture
def amplified2():
    """Projeção de paridade de 2 g-bits, construída direto"""
    return amplify(2)


@pytest.fixture
def gbit_file(tmp_path, gbit):
    """Arquivo de sistema do g-bit"""
    path = tmp_path / 'gbit.json'
    path.write_text(dump_system(gbit), encoding='utf-8')
    return path


@pytest.fixture
def ip3_file(tmp_path):
    """Tabela-verdade do produto interno com n = 3"""
    path = tmp_path / 'ip3.txt'
    path.write_text(format_truth_table(inner_product(3)), encoding='utf-8')
    return path


@pytest.fixture
def run_command():
    """Executa um comando de gerenciamento e devolve a saída (JSON decodificado ou texto)"""
    def run(*args, raw=False):
        out = StringIO()
        call_command(*args, stdout=out, stderr=StringIO())
        content = out.getvalue()
        return content if raw else json.loads(content)
    return run


@pytest.fixture
def limits(settings):
    """Sobrescreve entradas de GPT_LIMITS no teste"""
    def override(**values):
        settings.GPT_LIMITS = {**settings.GPT_LIMITS, **values}
    return override
