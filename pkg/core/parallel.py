"""
Execução de tarefas independentes (LPs por par, por clique, subconjuntos
justos da enumeração de vértices).

O resultado sai sempre na ordem da entrada, então relatórios não dependem
do número de workers.
"""
import logging
from concurrent.futures import ProcessPoolExecutor

from django.conf import settings

logger = logging.getLogger(__name__)


def default_jobs():
    return settings.GPT_LIMITS['JOBS']


def run_jobs(func, items, jobs=None, chunksize=16):
    """
    Aplica `func` a cada item, em paralelo quando jobs > 1.

    `func` precisa ser uma função de módulo (picklable).
    """
    items = list(items)
    jobs = default_jobs() if jobs is None else jobs
    if jobs <= 1 or len(items) < 2:
        return [func(item) for item in items]

    logger.debug('Distribuindo %d tarefas em %d processos', len(items), jobs)
    with ProcessPoolExecutor(max_workers=jobs) as executor:
        return list(executor.map(func, items, chunksize=chunksize))
