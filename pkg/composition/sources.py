"""
Origens de sistema aceitas pelos comandos: construtores (--gbit,
--hypercube D, --classical d, --amplify k) ou arquivos de sistema.
"""
import argparse

from django.core.exceptions import ValidationError
from django.utils.translation import gettext_lazy as _

from composition.projection import amplify
from gpt.builders import make_classical, make_gbit, make_hypercube
from gpt.choices import SystemKind
from gpt.serializers import load_system

# posicionais não aceitam dest; tudo converge para este atributo
SOURCES_DEST = 'sources'


class AppendSource(argparse.Action):
    """Acumula (tipo, valor) em `sources`, preservando a ordem da linha de comando"""

    def __init__(self, option_strings, dest, kind=None, **kwargs):
        self.kind = kind
        super().__init__(option_strings, dest, **kwargs)

    def __call__(self, parser, namespace, values, option_string=None):
        sources = list(getattr(namespace, SOURCES_DEST, None) or [])
        if self.kind == SystemKind.FILE:
            sources.extend((SystemKind.FILE, value) for value in values)
        else:
            sources.append((self.kind, values))
        setattr(namespace, SOURCES_DEST, sources)


def add_source_arguments(parser, files_nargs='*'):
    parser.add_argument(
        '--gbit', dest='sources', action=AppendSource, kind=SystemKind.GBIT, nargs=0,
        help='g-bit (quadrado, 4 estados puros)'
    )
    parser.add_argument(
        '--hypercube', dest='sources', action=AppendSource, kind=SystemKind.HYPERCUBE,
        type=int, metavar='D', help='Hypercube bit com D configurações binárias'
    )
    parser.add_argument(
        '--classical', dest='sources', action=AppendSource, kind=SystemKind.CLASSICAL,
        type=int, metavar='d', help='Simplexo clássico com d estados puros'
    )
    parser.add_argument(
        '--amplify', dest='sources', action=AppendSource, kind=SystemKind.AMPLIFIED,
        type=int, metavar='k', help='Projeção de paridade de k g-bits'
    )
    parser.add_argument(
        'files', nargs=files_nargs, action=AppendSource, kind=SystemKind.FILE,
        metavar='FILE', help='Arquivo de sistema (JSON)'
    )


def build_source(kind, value):
    if kind == SystemKind.GBIT:
        return make_gbit()
    if kind == SystemKind.HYPERCUBE:
        return make_hypercube(value)
    if kind == SystemKind.CLASSICAL:
        return make_classical(value)
    if kind == SystemKind.AMPLIFIED:
        return amplify(value)
    return load_system(value)


def describe_source(kind, value):
    if kind == SystemKind.GBIT:
        return kind.value
    return f'{kind.value}:{value}'


def systems_from_options(options, count):
    sources = options.get('sources') or []
    if len(sources) != count:
        raise ValidationError(
            _('Este comando exige %(count)s sistema(s); foram dados %(given)s.'),
            params={'count': count, 'given': len(sources)},
            code='wrong_source_count'
        )
    return [build_source(kind, value) for kind, value in sources]
