from composition.sources import add_source_arguments, describe_source, systems_from_options
from core.management.base import ReportCommand
from dimensions.serializers import DimensionReportSerializer
from dimensions.services import compute_report, default_certify_limit


class Command(ReportCommand):
    help = 'Calcula a dimensão de medição d_m e a dimensão de informação d_i de um sistema'
    echo_options = ('sources', 'certify', 'certify_limit', 'no_symmetry')

    def add_report_arguments(self, parser):
        add_source_arguments(parser)
        parser.add_argument(
            '--certify',
            action='store_true',
            help='Esgota todos os cliques na busca de d_m (resultado exato)'
        )
        parser.add_argument(
            '--certify-limit',
            type=int,
            default=None,
            help='Maior tamanho de clique testado na busca de d_m'
        )
        parser.add_argument(
            '--no-symmetry',
            action='store_true',
            help='Testa cada clique em vez de um representante por órbita'
        )

    def build_results(self, **options):
        system, = systems_from_options(options, 1)
        if options['certify']:
            certify_limit = max(system.vertex_count, 2)
        elif options['certify_limit'] is not None:
            certify_limit = options['certify_limit']
        else:
            certify_limit = default_certify_limit(system)
        report = compute_report(
            system,
            certify_limit=certify_limit,
            use_symmetry=not options['no_symmetry'],
            jobs=options['jobs'],
        )
        kind, value = options['sources'][0]
        return {
            'source': describe_source(kind, value),
            **DimensionReportSerializer(report).data,
        }

    def render_text(self, results):
        bound = 'exato' if results['d_m_exact'] else 'limite inferior'
        lines = [
            f'sistema   {results["system"]} ({results["vertex_count"]} vértices)',
            f'digest    {results["digest"]}',
            f'd_m       {results["d_m"]} ({bound})',
            f'd_i       {results["d_i"]}',
            f'estados   {" ".join(str(s) for s in results["d_m_witness"]["states"])}',
            f'clique    {" ".join(str(s) for s in results["d_i_witness"])}',
        ]
        for level in results['levels']:
            lines.append(
                f'nível {level["size"]}: {level["orbits"]} órbitas, '
                f'{level["lps_solved"]} LPs, {level["feasible"]} viáveis'
            )
        return '\n'.join(lines) + '\n'
