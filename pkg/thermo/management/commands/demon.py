import random

from django.core.exceptions import ValidationError
from django.utils.translation import gettext_lazy as _

from core.management.base import ReportCommand
from protocols.models import BitString
from thermo.erasure import demon_protocol
from thermo.serializers import DemonReportSerializer
from thermo.validators import validate_dimension


class Command(ReportCommand):
    help = 'Protocolo de memória do demônio de Maxwell num hypercube bit, com livro de energia'
    echo_options = ('D', 'decisions', 'seed', 'temperature', 'readback')

    def add_report_arguments(self, parser):
        parser.add_argument('--D', dest='D', type=int, default=None, help='Número de passos (bits de decisão)')
        parser.add_argument(
            '--decisions',
            default=None,
            help='Decisões do demônio, ex: 10110010 (padrão: sorteadas com --seed)'
        )
        parser.add_argument('--seed', type=int, default=0)
        parser.add_argument('--temperature', type=float, default=None, help='T em kelvin, para custos em joules')
        parser.add_argument('--readback', type=int, default=None, help='Lê ζ_k antes do apagamento (1-based)')

    def build_results(self, **options):
        decisions = self.decisions(options['D'], options['decisions'], options['seed'])
        report = demon_protocol(
            decisions,
            temperature=options['temperature'],
            readback=options['readback'],
        )
        return DemonReportSerializer(report).data

    @staticmethod
    def decisions(dimension, text, seed):
        if text is not None:
            bits = BitString.parse(text).bits
            if dimension is not None and dimension != len(bits):
                raise ValidationError(
                    _('--D %(dimension)s não confere com %(given)s decisões.'),
                    params={'dimension': dimension, 'given': len(bits)},
                    code='shape_mismatch'
                )
            return bits
        if dimension is None:
            raise ValidationError(_('Informe --D ou --decisions.'), code='missing_dimension')
        validate_dimension(dimension)
        rng = random.Random(seed)
        return tuple(rng.randrange(2) for _step in range(dimension))

    def render_text(self, results):
        lines = [
            f'D                  {results["D"]}',
            f'decisões           {results["decisions"]}',
            f'bits gravados      {results["stored_bits"]}',
            f'custo (bits)       {results["total_cost_bits"]}',
            f'Landauer (bits)    {results["landauer_bound_bits"]}',
            f'déficit (bits)     {results["deficit_bits"]}',
        ]
        if results['temperature'] is not None:
            lines.append(f'custo (J)          {results["energy_joules"]:.6e}')
            lines.append(f'Landauer (J)       {results["landauer_joules"]:.6e}')
        if results['readback'] is not None:
            readback = results['readback']
            lines.append(f'leitura ζ_{readback["k"]}         {readback["value"]}')
        lines.append('')
        for entry in results['ledger']:
            lines.append(f'{entry["step"]:>3} {entry["operation"]:<15} {entry["cost_bits"]:>3}  {entry["detail"]}')
        return '\n'.join(lines) + '\n'
