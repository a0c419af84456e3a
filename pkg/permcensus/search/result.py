# coding=utf-8
"""
Search Result Module

EnumerationResult (one representative per isometry class plus counts) and
SearchBudget (node and wall-time caps, progress callbacks).
"""

import time
from collections import Counter
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional, Set

from permcensus.core.code import Code
from permcensus.utils.errors import ResourceCapExceeded

ProgressCallback = Callable[[Dict[str, Any]], None]


class SearchBudget:
    """
    Node and wall-time caps shared by one search

    Caps of 0 mean unlimited. tick() raises ResourceCapExceeded once a cap
    is passed; the caller adds its partial counts to the diagnostics.
    """

    def __init__(self, max_nodes: int = 0, max_seconds: float = 0,
                 on_progress: Optional[ProgressCallback] = None, progress_interval: float = 1.0):
        self.max_nodes = max_nodes
        self.max_seconds = max_seconds
        self.on_progress = on_progress
        self.progress_interval = progress_interval
        self.nodes = 0
        self.started = time.monotonic()
        self._last_report = self.started

    @property
    def elapsed(self) -> float:
        return time.monotonic() - self.started

    def remaining_seconds(self) -> float:
        """Seconds left under the time cap (0 = unlimited)"""
        if not self.max_seconds:
            return 0
        return max(self.max_seconds - self.elapsed, 1e-3)

    def tick(self, count: int = 1, **stats: Any) -> None:
        """Count search nodes, check caps, report progress at most once per interval"""
        self.nodes += count
        if self.max_nodes and self.nodes > self.max_nodes:
            raise ResourceCapExceeded(
                f"node cap {self.max_nodes} reached",
                {"node_count": self.nodes, "wall_time_seconds": round(self.elapsed, 3)},
            )
        now = time.monotonic()
        if self.max_seconds and now - self.started > self.max_seconds:
            raise ResourceCapExceeded(
                f"time cap {self.max_seconds}s reached",
                {"node_count": self.nodes, "wall_time_seconds": round(now - self.started, 3)},
            )
        if self.on_progress is not None and now - self._last_report >= self.progress_interval:
            self._last_report = now
            self.on_progress(dict(stats, nodes=self.nodes))


@dataclass
class ClassRecord:
    """One isometry class found by a search"""

    certificate: bytes
    size: int
    maximal: bool
    group_size: int
    code: Optional[Code] = None


@dataclass
class EnumerationResult:
    """
    Census output

    counts_by_size and maximal_counts_by_size cover every class the search
    visited; codes holds the emitted representatives (all classes, or the
    maximal ones, or the balanced ones, depending on the run).
    """

    parameters: Dict[str, Any]
    codes: List[Code] = field(default_factory=list)
    certificates: List[bytes] = field(default_factory=list)
    maximal_flags: List[bool] = field(default_factory=list)
    group_sizes: List[int] = field(default_factory=list)
    counts_by_size: Dict[int, int] = field(default_factory=dict)
    maximal_counts_by_size: Dict[int, int] = field(default_factory=dict)
    wall_time: float = 0.0
    node_count: int = 0

    @classmethod
    def from_records(cls, parameters: Dict[str, Any], records: List[ClassRecord],
                     emit: Callable[[ClassRecord], bool], wall_time: float = 0.0,
                     node_count: int = 0) -> "EnumerationResult":
        """Assemble a result; emitted records are ordered by (size, certificate)"""
        ordered = sorted(records, key=lambda r: (r.size, r.certificate))
        result = cls(
            parameters=dict(parameters),
            counts_by_size=dict(sorted(Counter(r.size for r in ordered).items())),
            maximal_counts_by_size=dict(sorted(Counter(r.size for r in ordered if r.maximal).items())),
            wall_time=wall_time,
            node_count=node_count,
        )
        for record in ordered:
            if emit(record):
                result.codes.append(record.code)
                result.certificates.append(record.certificate)
                result.maximal_flags.append(record.maximal)
                result.group_sizes.append(record.group_size)
        return result

    @property
    def total_classes(self) -> int:
        return sum(self.counts_by_size.values())

    @property
    def total_maximal(self) -> int:
        return sum(self.maximal_counts_by_size.values())

    @property
    def largest_size(self) -> int:
        return max(self.counts_by_size, default=0)

    def maximal_only(self) -> "EnumerationResult":
        """Copy emitting only the maximal classes; counts are unchanged"""
        keep = [i for i, maximal in enumerate(self.maximal_flags) if maximal]
        return EnumerationResult(
            parameters=dict(self.parameters, maximal_only=True),
            codes=[self.codes[i] for i in keep],
            certificates=[self.certificates[i] for i in keep],
            maximal_flags=[True] * len(keep),
            group_sizes=[self.group_sizes[i] for i in keep],
            counts_by_size=dict(self.counts_by_size),
            maximal_counts_by_size=dict(self.maximal_counts_by_size),
            wall_time=self.wall_time,
            node_count=self.node_count,
        )

    def certificate_set(self) -> Set[bytes]:
        return set(self.certificates)

    def emitted_counts_by_size(self) -> Dict[int, int]:
        return dict(sorted(Counter(c.size for c in self.codes).items()))

    def summary(self) -> Dict[str, Any]:
        """JSON-ready summary without the codes"""
        return {
            "parameters": self.parameters,
            "classes": self.total_classes,
            "maximal": self.total_maximal,
            "emitted": len(self.codes),
            "counts_by_size": {str(k): v for k, v in self.counts_by_size.items()},
            "maximal_counts_by_size": {str(k): v for k, v in self.maximal_counts_by_size.items()},
            "node_count": self.node_count,
            "wall_time_seconds": round(self.wall_time, 3),
        }
