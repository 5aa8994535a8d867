"""Wall-clock timing of long computations, reported through logging."""

from __future__ import annotations

import logging
from collections.abc import Iterator
from contextlib import contextmanager
from time import perf_counter


@contextmanager
def timed(log: logging.Logger, what: str) -> Iterator[dict[str, object]]:
    """Time a block and log it at DEBUG on exit, also when the block raises.

    Yields a dict the block fills with facts worth reporting; they are logged as
    ``what: key=value, ... (0.123s)``::

        with timed(logger, "census m=5") as facts:
            facts["classes"] = len(classes)
    """
    facts: dict[str, object] = {}
    start = perf_counter()
    try:
        yield facts
    finally:
        details = ", ".join(f"{key}={value}" for key, value in facts.items())
        log.debug("%s: %s (%.3fs)", what, details or "done", perf_counter() - start)
