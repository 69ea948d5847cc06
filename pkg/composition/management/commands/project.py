from composition.projection import project_system
from composition.serializers import load_boxes
from core.management.base import ReportCommand
from gpt.serializers import system_to_file


class Command(ReportCommand):
    help = 'Aplica a projeção de paridade a um arquivo de caixas e grava o sistema resultante'
    envelope = False

    def add_report_arguments(self, parser):
        parser.add_argument('boxes', help='Arquivo de caixas (saída de compose)')
        parser.add_argument('--name', default=None, help='Nome do sistema projetado')

    def build_results(self, **options):
        system = project_system(load_boxes(options['boxes']), name=options['name'])
        return system_to_file(system)

    def render_text(self, results):
        lines = [f'{results["name"]}: {len(results["vertices"])} vértices']
        lines.extend(' '.join(row) for row in results['vertices'])
        return '\n'.join(lines) + '\n'
