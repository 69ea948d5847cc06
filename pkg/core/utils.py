"""
Funções utilitárias para o app core
"""
import hashlib
import json
from itertools import product

from django.core.serializers.json import DjangoJSONEncoder


def canonical_json(data):
    """
    Serializa `data` de forma reproduzível byte a byte.

    Chaves ordenadas, indentação fixa e quebra de linha final.
    """
    return json.dumps(
        data,
        cls=DjangoJSONEncoder,
        sort_keys=True,
        indent=2,
        ensure_ascii=False
    ) + '\n'


def digest(data):
    """sha256 (hex) do JSON canônico compacto de `data`"""
    payload = json.dumps(data, sort_keys=True, separators=(',', ':'), ensure_ascii=False)
    return hashlib.sha256(payload.encode('utf-8')).hexdigest()


def all_bit_strings(length):
    """Todas as tuplas de bits de tamanho `length`, em ordem lexicográfica"""
    return list(product((0, 1), repeat=length))


def bits_to_index(bits):
    """Bits mais significativos primeiro: (1, 0, 1) -> 5"""
    index = 0
    for bit in bits:
        index = (index << 1) | bit
    return index


def index_to_bits(index, length):
    return tuple((index >> (length - 1 - i)) & 1 for i in range(length))


def xor_all(bits):
    result = 0
    for bit in bits:
        result ^= bit
    return result
