from core.management.base import ReportCommand
from protocols.models import BitString
from thermo.erasure import erasure_cycle
from thermo.models import MemoryState
from thermo.serializers import ErasureSerializer


class Command(ReportCommand):
    help = 'Ciclo de apagamento de um hypercube bit: medir, apagar o registro, rodar ao vértice inicial'
    echo_options = ('D', 'initial', 'reset')

    def add_report_arguments(self, parser):
        parser.add_argument('--D', dest='D', type=int, required=True)
        parser.add_argument('--initial', default=None, help='Vértice inicial ζ da memória (padrão 0…0)')
        parser.add_argument('--reset', default=None, help='Vértice ao qual a memória volta (padrão 0…0)')

    def build_results(self, **options):
        initial = BitString.parse(options['initial']).bits if options['initial'] else None
        target = BitString.parse(options['reset']).bits if options['reset'] else None
        memory = MemoryState(options['D'], zeta=initial)
        start = tuple(memory.zeta)
        entries, total = erasure_cycle(options['D'], memory=memory, reset_target=target)
        return ErasureSerializer({
            'dimension': options['D'],
            'initial_zeta': start,
            'final_zeta': tuple(memory.zeta),
            'total_cost_bits': total,
            'entries': entries,
        }).data

    def render_text(self, results):
        lines = [
            f'D            {results["D"]}',
            f'ζ inicial    {results["initial_zeta"]}',
            f'ζ final      {results["final_zeta"]}',
            f'custo (bits) {results["total_cost_bits"]}',
        ]
        for entry in results['ledger']:
            lines.append(f'{entry["step"]:>3} {entry["operation"]:<15} {entry["cost_bits"]:>3}  {entry["detail"]}')
        return '\n'.join(lines) + '\n'
