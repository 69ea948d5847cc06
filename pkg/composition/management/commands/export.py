from composition.sources import add_source_arguments, systems_from_options
from core.management.base import ReportCommand
from gpt.serializers import system_to_file


class Command(ReportCommand):
    help = 'Grava um sistema (construtor ou arquivo) no formato de arquivo de sistema'
    envelope = False

    def add_report_arguments(self, parser):
        add_source_arguments(parser)

    def build_results(self, **options):
        system, = systems_from_options(options, 1)
        return system_to_file(system)

    def render_text(self, results):
        lines = [f'{results["name"]}: medições {[m["outcomes"] for m in results["measurements"]]}']
        lines.extend(' '.join(row) for row in results['vertices'])
        return '\n'.join(lines) + '\n'
