import logging
import time
from contextlib import contextmanager
from typing import Iterator, List

logger = logging.getLogger("aztecdet")

__all__ = ["logger", "timed"]


@contextmanager
def timed(label: str) -> Iterator[List[float]]:
    """
    Measure the wall time of a block in milliseconds.

    The yielded list receives a single entry, the elapsed time, once the block exits.

    Example
    -------
    >>> with timed("bareiss n=40") as elapsed:
    ...     det_bareiss(A)
    >>> elapsed[0]
    """
    elapsed: List[float] = []
    start = time.perf_counter()
    try:
        yield elapsed
    finally:
        elapsed.append((time.perf_counter() - start) * 1000.0)
        logger.debug(f"{label}: {elapsed[0]:.1f} ms")
