"""Worker module for evaluating scalar fields over a tracing grid in bands."""

import asyncio
import concurrent.futures
import functools
import logging
import time
import uuid
from typing import Callable, List, Optional

import numpy as np

from .config import config

logger = logging.getLogger(__name__)

Field = Callable[[np.ndarray, np.ndarray], np.ndarray]


class BandWorker:
    """Evaluates one horizontal band of grid rows."""

    def __init__(self, field: Field, xs: np.ndarray, ys: np.ndarray):
        self.field = field
        self.xs = xs
        self.ys = ys

        # Short worker ID for logging
        self.worker_id = str(uuid.uuid4())[:8]

    def evaluate_band(self, row_start: int, row_stop: int) -> np.ndarray:
        """Field values for rows [row_start, row_stop), shape (rows, len(xs))."""
        start_time = time.time()
        grid_x, grid_y = np.meshgrid(self.xs, self.ys[row_start:row_stop])
        values = np.asarray(self.field(grid_x, grid_y), dtype=float)
        elapsed_time = time.time() - start_time
        logger.debug(f"Worker[{self.worker_id}] rows {row_start}:{row_stop} in {elapsed_time:.4f}s")
        return values


def evaluate_grid(field: Field, xs: np.ndarray, ys: np.ndarray) -> np.ndarray:
    """Sequential reference evaluation; rows follow ``ys``."""
    return BandWorker(field, xs, ys).evaluate_band(0, len(ys))


async def evaluate_grid_concurrently(
    field: Field,
    xs: np.ndarray,
    ys: np.ndarray,
    band_rows: Optional[int] = None,
    max_concurrency: Optional[int] = None,
) -> np.ndarray:
    """
    Evaluate ``field`` over the grid xs x ys in concurrent row bands.

    Args:
        field: Vectorized function of (X, Y) meshgrid arrays
        xs: Column sample positions
        ys: Row sample positions
        band_rows: Rows per band (defaults to config value)
        max_concurrency: Maximum bands in flight (defaults to config value)

    Returns:
        Array of shape (len(ys), len(xs)), identical to ``evaluate_grid``
    """
    band_rows = max(1, band_rows or config.trace_band_rows)
    max_concurrency = max(1, max_concurrency or config.max_concurrent_bands)
    semaphore = asyncio.Semaphore(max_concurrency)
    worker = BandWorker(field, xs, ys)

    bands = [(start, min(start + band_rows, len(ys))) for start in range(0, len(ys), band_rows)]
    logger.info(f"Evaluating {len(ys)}x{len(xs)} grid in {len(bands)} bands with max concurrency {max_concurrency}")

    loop = asyncio.get_running_loop()
    with concurrent.futures.ThreadPoolExecutor(
        max_workers=max_concurrency,
        thread_name_prefix="trace_band"
    ) as executor:

        async def evaluate_with_semaphore(start: int, stop: int) -> np.ndarray:
            async with semaphore:
                return await loop.run_in_executor(
                    executor, functools.partial(worker.evaluate_band, start, stop)
                )

        results: List[np.ndarray] = await asyncio.gather(
            *(evaluate_with_semaphore(start, stop) for start, stop in bands)
        )

    if not results:
        return np.zeros((0, len(xs)))
    return np.vstack(results)
