import os

from joblib import delayed
from joblib import Parallel

from gospace.config import THREADS_ENV


def get_n_jobs(n_jobs=None):
    """Number of workers, capped by the ``GOSPACE_THREADS`` variable.

    Args:
        n_jobs (int or None): explicit worker count. If None, the environment
            variable is used, falling back to the number of CPUs.

    Returns (int): positive worker count.

    """
    if n_jobs is None:
        value = os.environ.get(THREADS_ENV)
        if value:
            try:
                n_jobs = int(value)
            except ValueError:
                raise ValueError('{} must be an integer, got {!r}'
                                 .format(THREADS_ENV, value))
        else:
            n_jobs = os.cpu_count() or 1
    return max(1, n_jobs)


def parallel_map(func, items, n_jobs=None):
    """Applies `func` to every item; results keep the order of `items`.

    Threads are used so that closures over spaces need no pickling. With a
    single worker the items are processed inline.
    """
    items = list(items)
    n_jobs = get_n_jobs(n_jobs)
    if n_jobs == 1 or len(items) <= 1:
        return [func(item) for item in items]
    return Parallel(n_jobs=n_jobs, prefer='threads')(
        delayed(func)(item) for item in items)
