# coding=utf-8
"""
Run Configuration Module

RunConfig and the parameter validators applied before any computation.
"""

from dataclasses import dataclass, field, asdict
from typing import Any, Dict, List, Optional

from permcensus.core.permutation import MAX_DEGREE, MIN_DEGREE
from permcensus.utils.errors import InvalidParameterError

OUTPUT_FORMATS = ("json", "csv", "text")
ALGORITHMS = ("list", "canaug")
ORBIT_MODES = ("left", "conjugation")


def validate_degree(n: Optional[int]) -> int:
    """
    Validate degree n

    Examples:
        >>> validate_degree(5)
        5
    """
    if n is None:
        raise InvalidParameterError("Degree n is required", suggestion="Pass -n <degree>")
    if not isinstance(n, int):
        raise InvalidParameterError("n must be an integer")
    if not MIN_DEGREE <= n <= MAX_DEGREE:
        raise InvalidParameterError(f"n must lie in {MIN_DEGREE}..{MAX_DEGREE}, got {n}")
    return n


def validate_distance(n: int, d: Optional[int]) -> int:
    """Validate minimum distance 2 <= d <= n"""
    if d is None:
        raise InvalidParameterError("Minimum distance d is required", suggestion="Pass -d <distance>")
    if not isinstance(d, int) or not 2 <= d <= n:
        raise InvalidParameterError(f"d must lie in 2..{n}, got {d}")
    return d


def validate_balance(r: Optional[int]) -> int:
    """Validate balance parameter r >= 1"""
    if r is None or not isinstance(r, int) or r < 1:
        raise InvalidParameterError(f"r must be an integer >= 1, got {r}")
    return r


def validate_jobs(jobs: Any) -> int:
    """Validate worker count"""
    if not isinstance(jobs, int) or jobs < 1:
        raise InvalidParameterError(f"--jobs must be an integer >= 1, got {jobs}")
    return jobs


def validate_cap(name: str, value: Any) -> float:
    """Validate a resource cap (0 = unlimited)"""
    if not isinstance(value, (int, float)) or value < 0:
        raise InvalidParameterError(f"{name} must be >= 0 (0 = unlimited), got {value}")
    return value


def validate_choice(name: str, value: str, choices: tuple) -> str:
    """Validate an enumerated option"""
    if value not in choices:
        raise InvalidParameterError(
            f"Unsupported {name} '{value}'",
            suggestion=f"Supported values: {', '.join(choices)}"
        )
    return value


@dataclass
class RunConfig:
    """
    Command parameters after merging config file, environment and flags

    Unused fields stay at their defaults; validate() checks the fields the
    command declared as required.
    """

    command: str
    n: Optional[int] = None
    d: Optional[int] = None
    r: Optional[int] = None
    size: Optional[int] = None
    max_size: Optional[int] = None
    algorithm: str = "canaug"
    mode: str = "left"
    generators: List[List[int]] = field(default_factory=list)
    inputs: List[str] = field(default_factory=list)
    out_dir: str = ""
    jobs: int = 1
    max_nodes: int = 0
    max_seconds: float = 0
    output_format: str = "text"
    maximal_only: bool = False
    include_all: bool = False
    inversion: bool = True
    oracle: bool = False
    progress_interval: float = 1.0
    split_depth: int = 3
    stabilizer_child_pruning: bool = True
    timezone: str = "UTC"

    def validate(self, require: tuple = ()) -> "RunConfig":
        """
        Validate parameter ranges

        Args:
            require: names among ("n", "d", "r", "size") the command needs

        Returns:
            self, for chaining
        """
        if "n" in require or self.n is not None:
            validate_degree(self.n)
        if "d" in require or self.d is not None:
            validate_distance(validate_degree(self.n), self.d)
        if "r" in require:
            validate_balance(self.r)
        if "size" in require and (self.size is None or self.size < 1):
            raise InvalidParameterError(f"size must be >= 1, got {self.size}")
        if self.max_size is not None and self.max_size < 1:
            raise InvalidParameterError(f"--max-size must be >= 1, got {self.max_size}")
        validate_jobs(self.jobs)
        validate_cap("--max-nodes", self.max_nodes)
        validate_cap("--max-seconds", self.max_seconds)
        validate_choice("format", self.output_format, OUTPUT_FORMATS)
        validate_choice("algorithm", self.algorithm, ALGORITHMS)
        validate_choice("mode", self.mode, ORBIT_MODES)
        return self

    @classmethod
    def from_config(cls, command: str, config: Dict[str, Any], **overrides: Any) -> "RunConfig":
        """
        Build from a loaded config dict plus command-line overrides

        Overrides equal to None are ignored so unset flags keep config values.
        """
        search = config.get("SEARCH", {})
        values: Dict[str, Any] = {
            "jobs": search.get("JOBS", 1),
            "max_nodes": search.get("MAX_NODES", 0),
            "max_seconds": search.get("MAX_SECONDS", 0),
            "progress_interval": search.get("PROGRESS_INTERVAL", 1.0),
            "split_depth": search.get("SPLIT_DEPTH", 3),
            "stabilizer_child_pruning": search.get("STABILIZER_CHILD_PRUNING", True),
            "out_dir": config.get("OUTPUT_DIR", ""),
            "output_format": config.get("FORMAT", "text"),
            "timezone": config.get("TIMEZONE", "UTC"),
        }
        values.update({k: v for k, v in overrides.items() if v is not None})
        return cls(command=command, **values)

    def parameters(self) -> Dict[str, Any]:
        """Run parameters recorded in manifests (paths and runtime knobs excluded)"""
        keep = ("command", "n", "d", "r", "size", "max_size", "algorithm", "mode",
                "generators", "inversion", "maximal_only", "include_all")
        data = asdict(self)
        return {k: data[k] for k in keep if data[k] not in (None, [])}
