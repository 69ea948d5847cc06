from composition.isomorphism import find_isomorphism
from composition.sources import add_source_arguments, describe_source, systems_from_options
from core.management.base import ReportCommand
from gpt.serializers import system_digest


class Command(ReportCommand):
    help = 'Testa se dois sistemas são iguais a menos de reetiquetagem de configurações e resultados'
    echo_options = ('sources',)

    def add_report_arguments(self, parser):
        add_source_arguments(parser)

    def build_results(self, **options):
        first, second = systems_from_options(options, 2)
        relabeling = find_isomorphism(first, second)
        results = {
            'systems': [
                {'source': describe_source(kind, value), 'name': system.name, 'digest': system_digest(system)}
                for (kind, value), system in zip(options['sources'], (first, second))
            ],
            'isomorphic': relabeling is not None,
            'relabeling': None,
        }
        if relabeling is not None:
            results['relabeling'] = {
                'settings': list(relabeling.settings),
                'outcomes': [list(sigma) for sigma in relabeling.outcomes],
            }
        return results

    def render_text(self, results):
        names = ' x '.join(system['name'] for system in results['systems'])
        verdict = 'isomorfos' if results['isomorphic'] else 'não isomorfos'
        return f'{names}: {verdict}\n'
