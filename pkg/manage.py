#!/usr/bin/env python
"""
Linha de comando do gpt-dimensions.

    ./manage.py dims --gbit
    ./manage.py compose --output boxes.json
    ./manage.py protocol ic --n 4
    ./manage.py demon --D 8

Códigos de saída: 0 sucesso, 2 entrada inválida, 3 limite de recursos.
"""
import os
import sys


def main():
    os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'settings.settings')
    try:
        from django.core.management import execute_from_command_line
    except ImportError as exc:
        raise ImportError(
            'Django não encontrado: instale o projeto com `pip install -e .` '
            'num ambiente virtual ativo.'
        ) from exc
    execute_from_command_line(sys.argv)


if __name__ == '__main__':
    main()
