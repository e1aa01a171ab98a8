# workers/pool.py
# Fan-out for per-graph work. Results always come back in input order so
# reports are identical whatever the job count.

import logging
import sys
from typing import Callable, Iterable, Iterator

from joblib import Parallel, delayed
from tqdm import tqdm

from config import settings

logger = logging.getLogger(__name__)


def progress(items: Iterable, desc: str, total: int = None) -> Iterable:
    """Wrap items in a stderr progress bar when enabled and stderr is a terminal"""
    enabled = settings.show_progress and sys.stderr.isatty()
    return tqdm(items, desc=desc, total=total, file=sys.stderr, disable=not enabled, leave=False)


def map_ordered(func: Callable, items: Iterable, jobs: int = 1) -> Iterator:
    if jobs <= 1:
        for item in items:
            yield func(item)
        return

    logger.info("[POOL] jobs=%d batch_size=%d", jobs, settings.pool_chunksize)
    parallel = Parallel(n_jobs=jobs, batch_size=settings.pool_chunksize, return_as="generator")
    yield from parallel(delayed(func)(item) for item in items)
