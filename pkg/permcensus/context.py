# coding=utf-8
"""
Run Context Module

RunContext bundles one command invocation: its RunConfig, the worker pool,
the search budget with its stderr progress bar, and the census writer.
"""

import logging
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Any, Callable, Dict, List, Optional

from tqdm import tqdm

from permcensus.core.config import RunConfig
from permcensus.search.genbylist import Mapper
from permcensus.search.result import SearchBudget
from permcensus.storage.census import CensusWriter
from permcensus.utils.time import Stopwatch

logger = logging.getLogger(__name__)


class RunContext:
    """
    Run Context Class

    Usage Example:
        run = RunConfig.from_config("enumerate", load_config(), n=4, d=3)
        with RunContext(run) as ctx:
            result = canonical_augmentation(4, 3, budget=ctx.budget(), mapper=ctx.mapper())
            ctx.writer().write(result)

    jobs == 1 runs everything in-process (mapper() is None); otherwise a
    process pool of `jobs` workers is created on first use and shut down
    on exit.
    """

    def __init__(self, run: RunConfig, config: Optional[Dict[str, Any]] = None, show_progress: bool = True):
        """
        Initialize Run Context

        Args:
            run: Validated run configuration
            config: Full loaded configuration (oracle caps)
            show_progress: Draw the progress bar on stderr
        """
        self.run = run
        self.config = config or {}
        self.show_progress = show_progress and sys.stderr.isatty()
        self.stopwatch = Stopwatch()
        self._pool: Optional[ProcessPoolExecutor] = None
        self._bar: Optional[tqdm] = None

    def __enter__(self) -> "RunContext":
        return self

    def __exit__(self, exc_type, exc, tb) -> None:
        self.close()

    # === Config Access ===

    @property
    def jobs(self) -> int:
        return self.run.jobs

    @property
    def oracle_limits(self) -> Dict[str, int]:
        """Degree caps of the brute-force oracles"""
        oracle = self.config.get("ORACLE", {})
        return {
            "isometry": oracle.get("MAX_ISOMETRY_DEGREE", 5),
            "stabilizer": oracle.get("MAX_STABILIZER_DEGREE", 4),
        }

    # === Parallelism ===

    def map(self, fn: Callable, items: List) -> List:
        """Apply fn to every item, in-process for jobs == 1, else in the pool; input order kept"""
        if self.jobs <= 1:
            return [fn(item) for item in items]
        if self._pool is None:
            self._pool = ProcessPoolExecutor(max_workers=self.jobs)
            logger.debug("Worker pool started with %d processes", self.jobs)
        chunksize = max(1, len(items) // (self.jobs * 8))
        return list(self._pool.map(fn, items, chunksize=chunksize))

    def mapper(self) -> Optional[Mapper]:
        """Parallel map handed to the searches; None selects their single-worker mode"""
        return self.map if self.jobs > 1 else None

    # === Budget and Progress ===

    def _on_progress(self, stats: Dict[str, Any]) -> None:
        if self._bar is None:
            self._bar = tqdm(desc=self.run.command, unit=" nodes", file=sys.stderr, leave=False)
        self._bar.n = stats.pop("nodes", self._bar.n)
        self._bar.set_postfix(stats, refresh=False)
        self._bar.refresh()

    def budget(self) -> SearchBudget:
        """Fresh budget with the configured caps and progress reporting"""
        return SearchBudget(
            max_nodes=int(self.run.max_nodes),
            max_seconds=float(self.run.max_seconds),
            on_progress=self._on_progress if self.show_progress else None,
            progress_interval=self.run.progress_interval,
        )

    # === Output ===

    def writer(self) -> Optional[CensusWriter]:
        """Census writer for --out, or None when no directory was requested"""
        if not self.run.out_dir:
            return None
        return CensusWriter(self.run.out_dir, self.run.timezone)

    def close(self) -> None:
        """Release the progress bar and the worker pool"""
        if self._bar is not None:
            self._bar.close()
            self._bar = None
        if self._pool is not None:
            self._pool.shutdown(wait=True, cancel_futures=True)
            self._pool = None
        logger.debug("Run finished after %.2fs", self.stopwatch.elapsed)
