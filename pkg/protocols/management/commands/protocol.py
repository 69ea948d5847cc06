import random

from django.core.exceptions import ValidationError
from django.utils.translation import gettext_lazy as _

from core.management.base import ReportCommand
from protocols.choices import Carrier, NamedFunction
from protocols.complexity import cc_protocol
from protocols.functions import constant, equality, inner_product, random_table, xor_first_bits
from protocols.index import ic_quantity, index_protocol
from protocols.models import BitString
from protocols.parsers import load_truth_table
from protocols.serializers import (
    CcReportSerializer,
    IcReportSerializer,
    PrBoxSimulationSerializer,
    TranscriptSerializer,
)
from protocols.translators import simulate_hypercube_with_prboxes, simulate_prboxes_with_hypercube

ECHO_OPTIONS = {
    'index': ('bits', 'k', 'sample', 'seed'),
    'ic': ('n', 'carrier'),
    'cc': ('table', 'function', 'bits', 'seed'),
    'prbox-sim': ('zeta', 'k'),
    'prbox-from-hypercube': ('table', 'b', 'c'),
}


class Command(ReportCommand):
    help = 'Simula os protocolos de comunicação com hypercube bits e caixas PR'

    def add_arguments(self, parser):
        subparsers = parser.add_subparsers(dest='subcommand', required=True)

        index = subparsers.add_parser('index', help='Função índice com um hypercube bit')
        self.add_common_arguments(index)
        index.add_argument('--bits', required=True, help='Cadeia b de Alice, ex: 10110')
        index.add_argument('--k', type=int, required=True, help='Índice pedido por Bob (1-based)')
        index.add_argument(
            '--sample', type=int, default=None,
            help='Demonstração: sorteia N pares (b, k) com --seed e mede a frequência de acerto'
        )
        index.add_argument('--seed', type=int, default=0)

        ic = subparsers.add_parser('ic', help='Quantidade de causalidade de informação')
        self.add_common_arguments(ic)
        ic.add_argument('--n', type=int, required=True)
        ic.add_argument('--carrier', choices=Carrier.values, default=Carrier.HYPERCUBE.value)

        cc = subparsers.add_parser('cc', help='Complexidade de comunicação de uma tabela-verdade')
        self.add_common_arguments(cc)
        source = cc.add_mutually_exclusive_group(required=True)
        source.add_argument('--table', help='Arquivo de tabela-verdade')
        source.add_argument('--function', choices=NamedFunction.values, help='Função nomeada')
        cc.add_argument('--bits', type=int, default=3, help='Bits de entrada de cada parte (--function)')
        cc.add_argument('--seed', type=int, default=0, help='Semente de --function random')

        simulation = subparsers.add_parser('prbox-sim', help='Hypercube bit simulado com caixas PR')
        self.add_common_arguments(simulation)
        simulation.add_argument('--zeta', required=True, help='Rótulo ζ do hypercube bit')
        simulation.add_argument('--k', type=int, required=True, help='Configuração medida (1-based)')

        converse = subparsers.add_parser(
            'prbox-from-hypercube', help='f(b, c) obtido de um hypercube bit com D = |Y|'
        )
        self.add_common_arguments(converse)
        converse.add_argument('--table', required=True, help='Arquivo de tabela-verdade')
        converse.add_argument('--b', required=True, help='Entrada de Alice')
        converse.add_argument('--c', default=None, help='Entrada de Bob')

    def echo(self, options):
        subcommand = options['subcommand']
        return {
            'name': f'protocol {subcommand}',
            'options': {key: options.get(key) for key in ECHO_OPTIONS[subcommand]},
        }

    def build_results(self, **options):
        handler = {
            'index': self.run_index,
            'ic': self.run_ic,
            'cc': self.run_cc,
            'prbox-sim': self.run_prbox_sim,
            'prbox-from-hypercube': self.run_prbox_from_hypercube,
        }[options['subcommand']]
        return handler(**options)

    def run_index(self, **options):
        b = BitString.parse(options['bits'])
        output, transcript = index_protocol(b, options['k'])
        results = {
            'b': str(b),
            'k': options['k'],
            'output': output,
            'correct': output == b.bit(options['k']),
            'transcript': TranscriptSerializer(transcript).data,
        }
        if options['sample'] is not None:
            results['sample'] = self.sample_index(len(b), options['sample'], options['seed'])
        return results

    @staticmethod
    def sample_index(n, runs, seed):
        if runs < 1:
            raise ValidationError(_('--sample exige N >= 1.'), code='invalid_sample')
        rng = random.Random(seed)
        correct = 0
        for _run in range(runs):
            bits = BitString(tuple(rng.randrange(2) for _bit in range(n)))
            k = rng.randrange(1, n + 1)
            correct += index_protocol(bits, k)[0] == bits.bit(k)
        return {'runs': runs, 'seed': seed, 'correct': correct, 'frequency': correct / runs}

    def run_ic(self, **options):
        return IcReportSerializer(ic_quantity(options['n'], options['carrier'])).data

    def run_cc(self, **options):
        if options['table']:
            table = load_truth_table(options['table'])
        else:
            n = options['bits']
            table = {
                NamedFunction.INNER_PRODUCT: lambda: inner_product(n),
                NamedFunction.EQUALITY: lambda: equality(n),
                NamedFunction.CONSTANT: lambda: constant(n, n),
                NamedFunction.XOR_FIRST_BITS: lambda: xor_first_bits(n, n),
                NamedFunction.RANDOM: lambda: random_table(n, n, options['seed']),
            }[NamedFunction(options['function'])]()
        return CcReportSerializer(cc_protocol(table, jobs=options['jobs'])).data

    def run_prbox_sim(self, **options):
        simulation = simulate_hypercube_with_prboxes(BitString.parse(options['zeta']), options['k'])
        return PrBoxSimulationSerializer(simulation).data

    def run_prbox_from_hypercube(self, **options):
        table = load_truth_table(options['table'])
        output, transcript = simulate_prboxes_with_hypercube(table, options['b'], options['c'])
        c = BitString.parse(options['c']) if table.n_bob_bits else None
        return {
            'b': options['b'],
            'c': options['c'],
            'output': output,
            'expected': table(BitString.parse(options['b']), c),
            'transcript': TranscriptSerializer(transcript).data,
        }

    def render_text(self, results):
        lines = []
        for key, value in results.items():
            if isinstance(value, (dict, list)):
                continue
            lines.append(f'{key:<22} {value}')
        return '\n'.join(lines) + '\n'
