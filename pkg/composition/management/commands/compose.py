from django.core.exceptions import ValidationError
from django.utils.translation import gettext_lazy as _

from composition.enumeration import maximal_tensor_gbits
from composition.serializers import boxes_to_file
from core.management.base import ReportCommand


class Command(ReportCommand):
    help = 'Enumera os estados puros do produto tensorial maximal de g-bits (arquivo de caixas)'
    envelope = False

    def add_report_arguments(self, parser):
        parser.add_argument(
            '--gbits',
            type=int,
            default=2,
            help='Número de g-bits (só 2 é enumerado)'
        )

    def build_results(self, **options):
        if options['gbits'] != 2:
            raise ValidationError(
                _('A enumeração completa só é feita para 2 g-bits; use --amplify k para k partes.'),
                code='unsupported_parties'
            )
        return boxes_to_file(maximal_tensor_gbits(jobs=options['jobs']))

    def render_text(self, results):
        lines = [f'{len(results["boxes"])} vértices']
        for index, box in enumerate(results['boxes']):
            lines.append(f'{index:3d}  {box["kind"]:<20} {box["label"] or "-":<20} CHSH={box["chsh"]}')
        return '\n'.join(lines) + '\n'
