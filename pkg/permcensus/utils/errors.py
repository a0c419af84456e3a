# coding=utf-8
"""
Custom Error Classes

Defines all exception types raised by PermCensus. Every error carries a
machine code, a suggestion and the process exit status the CLI uses for it.
"""

from typing import Any, Dict, List, Optional, Tuple


class PermCensusError(Exception):
    """Base class for PermCensus errors"""

    exit_status = 2

    def __init__(self, message: str, code: str = "PERMCENSUS_ERROR", suggestion: Optional[str] = None):
        super().__init__(message)
        self.code = code
        self.message = message
        self.suggestion = suggestion

    def to_dict(self) -> dict:
        """Convert to dictionary format"""
        error_dict = {
            "code": self.code,
            "message": self.message,
            "exit_status": self.exit_status,
        }
        if self.suggestion:
            error_dict["suggestion"] = self.suggestion
        return error_dict


class InvalidParameterError(PermCensusError):
    """Invalid Parameter Error (ranges, degree mismatch, unsupported degree)"""

    def __init__(self, message: str, suggestion: Optional[str] = None):
        super().__init__(
            message=message,
            code="INVALID_PARAMETER",
            suggestion=suggestion or "Please check the parameter ranges (3 <= n <= 16, 2 <= d <= n)"
        )


class CodeFormatError(PermCensusError):
    """Code File Parse Error"""

    def __init__(self, source: str, reason: str, line: Optional[int] = None):
        where = f"{source}:{line}" if line is not None else source
        super().__init__(
            message=f"Failed to parse code {where}: {reason}",
            code="CODE_FORMAT_ERROR",
            suggestion="Expected a header 'n=<n> d=<d> s=<s>' followed by s lines of n images"
        )
        self.source = source
        self.line = line


class DistanceViolationError(PermCensusError):
    """Two code elements are closer than the minimum distance"""

    def __init__(self, first: Any, second: Any, distance: int, min_distance: int):
        super().__init__(
            message=(
                f"Distance violation: d_H({first}, {second}) = {distance} < d = {min_distance}"
            ),
            code="DISTANCE_VIOLATION",
            suggestion="Remove one element of the offending pair or lower d"
        )
        self.pair = (first, second)
        self.distance = distance
        self.min_distance = min_distance


class OracleLimitError(PermCensusError):
    """Brute-force oracle called beyond its degree cap"""

    def __init__(self, oracle: str, degree: int, limit: int):
        super().__init__(
            message=f"{oracle} is capped at n <= {limit}, got n = {degree}",
            code="ORACLE_LIMIT",
            suggestion="Use the certificate-based path (canon) for larger degrees"
        )


class GraphStructureError(PermCensusError):
    """Graph does not encode a permutation code"""

    def __init__(self, message: str):
        super().__init__(
            message=message,
            code="GRAPH_STRUCTURE",
            suggestion="Only graphs produced by build_graph (possibly relabelled) can be decoded"
        )


class EmptyResultError(PermCensusError):
    """Search finished without any admissible object"""

    exit_status = 1

    def __init__(self, message: str, suggestion: Optional[str] = None):
        super().__init__(
            message=message,
            code="EMPTY_RESULT",
            suggestion=suggestion
        )


class ResourceCapExceeded(PermCensusError):
    """Node or wall-time cap reached; carries partial-run diagnostics"""

    exit_status = 3

    def __init__(self, reason: str, diagnostics: Optional[Dict[str, Any]] = None):
        super().__init__(
            message=f"Resource cap exceeded: {reason}",
            code="RESOURCE_CAP",
            suggestion="Raise --max-nodes / --max-seconds (0 = unlimited); the census was NOT completed"
        )
        self.reason = reason
        self.diagnostics = diagnostics or {}

    def to_dict(self) -> dict:
        error_dict = super().to_dict()
        error_dict["diagnostics"] = self.diagnostics
        return error_dict


class CanonConsistencyError(PermCensusError):
    """Graph automorphism or isomorphism that does not realise an isometry (internal defect)"""

    exit_status = 4

    def __init__(self, message: str, details: Optional[List[Tuple[str, Any]]] = None):
        super().__init__(
            message=message,
            code="CANON_DEFECT",
            suggestion="This is a bug in the canonical labelling; please report the input code"
        )
        self.details = details or []
