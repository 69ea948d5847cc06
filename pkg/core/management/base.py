import logging
from contextlib import contextmanager
from pathlib import Path

from django.conf import settings
from django.core.exceptions import ValidationError
from django.core.management.base import BaseCommand, CommandError
from django.utils.translation import gettext_lazy as _

from core.choices import VERBOSITY_LOG_LEVELS, ExitCode
from core.exceptions import ResourceCapExceeded, first_message
from core.utils import canonical_json

APP_LOGGERS = ('core', 'gpt', 'lp', 'dimensions', 'composition', 'protocols', 'thermo')


class ReportCommand(BaseCommand):
    """
    Base dos comandos que emitem relatórios.

    Subclasses implementam `build_results(**options)` (dict serializável) e,
    opcionalmente, `render_text(results)` para a saída --text. O relatório JSON
    é canônico: mesma entrada e mesmas flags geram os mesmos bytes.
    """
    # opções ecoadas no relatório (flags que não mudam o resultado ficam fora)
    echo_options = ()
    # False: a saída é o próprio arquivo (sistema ou caixas), sem o envelope do relatório
    envelope = True

    def add_arguments(self, parser):
        self.add_common_arguments(parser)
        self.add_report_arguments(parser)

    def add_common_arguments(self, parser):
        parser.add_argument(
            '--text',
            action='store_true',
            help='Emite tabelas legíveis em vez de JSON'
        )
        parser.add_argument(
            '--output',
            help='Grava o relatório neste arquivo em vez do stdout'
        )
        parser.add_argument(
            '--jobs',
            type=int,
            default=None,
            help='Número máximo de processos para lotes de LPs (não muda o resultado)'
        )
        parser.add_argument(
            '--limit',
            action='append',
            default=[],
            metavar='NOME=VALOR',
            help='Sobrescreve um limite de GPT_LIMITS nesta execução, ex: --limit AMPLIFY_VERTEX_CAP=300000'
        )

    def add_report_arguments(self, parser):
        pass

    def build_results(self, **options):
        raise NotImplementedError

    def render_text(self, results):
        return canonical_json(results)

    def handle(self, *args, **options):
        self.configure_logging(options['verbosity'])
        try:
            with limits_overridden(parse_limits(options.get('limit') or [])):
                results = self.build_results(**options)
        except ResourceCapExceeded as exc:
            raise CommandError(first_message(exc), returncode=ExitCode.RESOURCE_CAP) from exc
        except ValidationError as exc:
            raise CommandError(first_message(exc), returncode=ExitCode.INVALID_INPUT) from exc

        if options['text']:
            content = self.render_text(results)
        elif not self.envelope:
            content = canonical_json(results)
        else:
            content = canonical_json({
                'command': self.echo(options),
                'results': results,
            })

        if options['output']:
            Path(options['output']).write_text(content, encoding='utf-8')
            self.stderr.write(self.style.SUCCESS(f'Relatório gravado em {options["output"]}'))
        else:
            self.stdout.write(content, ending='')

    def echo(self, options):
        name = self.__module__.rsplit('.', 1)[-1]
        return {
            'name': name,
            'options': {key: _plain(options.get(key)) for key in self.echo_options},
        }

    @staticmethod
    def configure_logging(verbosity):
        level = VERBOSITY_LOG_LEVELS.get(verbosity, 'DEBUG')
        for name in APP_LOGGERS:
            logging.getLogger(name).setLevel(level)


def _plain(value):
    if isinstance(value, (list, tuple)):
        return [_plain(item) for item in value]
    return value


def parse_limits(items):
    overrides = {}
    for item in items:
        key, _sep, value = item.partition('=')
        key = key.strip().upper()
        if key not in settings.GPT_LIMITS:
            raise ValidationError(
                _('Limite desconhecido: %(key)s.'), params={'key': key}, code='unknown_limit'
            )
        try:
            overrides[key] = int(value)
        except ValueError:
            raise ValidationError(
                _('O limite %(key)s exige um inteiro (recebido "%(value)s").'),
                params={'key': key, 'value': value},
                code='invalid_limit'
            ) from None
        if overrides[key] < 1:
            raise ValidationError(
                _('O limite %(key)s deve ser >= 1.'), params={'key': key}, code='invalid_limit'
            )
    return overrides


@contextmanager
def limits_overridden(overrides):
    """Troca GPT_LIMITS durante a execução do comando e restaura depois"""
    if not overrides:
        yield
        return
    original = settings.GPT_LIMITS
    settings.GPT_LIMITS = {**original, **overrides}
    try:
        yield
    finally:
        settings.GPT_LIMITS = original
