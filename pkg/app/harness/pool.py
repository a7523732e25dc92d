"""Batch fan-out over a process pool."""

from itertools import islice
from multiprocessing import Pool
from typing import Callable, Iterable, Iterator, List, Optional, TypeVar

from tqdm import tqdm

from app.logger import logger


T = TypeVar("T")
R = TypeVar("R")


def chunkify(items: Iterable[T], size: int) -> Iterator[List[T]]:
    """Split an iterable into lists of ``size`` items; the last may be shorter."""
    it = iter(items)
    while True:
        chunk = list(islice(it, size))
        if not chunk:
            return
        yield chunk


def run_batches(
    func: Callable[[List[T]], R],
    batches: Iterable[List[T]],
    workers: int = 1,
    progress: bool = False,
    desc: str = "Processing batches",
    total: Optional[int] = None,
) -> Iterator[R]:
    """Apply ``func`` to every batch, in submission order.

    With one worker the batches run inline. Otherwise they go through a
    process pool that is terminated when the caller stops iterating.
    """
    if workers <= 1:
        yield from tqdm(map(func, batches), desc=desc, total=total, disable=not progress)
        return

    logger.info(f"starting {workers} worker processes")
    with Pool(processes=workers) as pool:
        results = pool.imap(func, batches)
        yield from tqdm(results, desc=desc, total=total, disable=not progress)
