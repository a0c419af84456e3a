# coding=utf-8
"""
Census Manifest Data Model

The manifest.json of a census directory: run parameters, class counts,
tool and certificate format versions, and the list of code files.
"""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

STATUS_COMPLETE = "complete"
STATUS_ABORTED = "aborted"


def _int_keys(counts: Dict[Any, int]) -> Dict[int, int]:
    return {int(k): int(v) for k, v in sorted(counts.items(), key=lambda item: int(item[0]))}


@dataclass
class CensusManifest:
    """Census Manifest"""

    parameters: Dict[str, Any]                  # n, d, algorithm, inversion, ...
    tool_version: str
    certificate_format_version: int
    command: str = ""
    status: str = STATUS_COMPLETE
    generated_at: str = ""                      # ISO-8601 in the configured timezone
    classes: int = 0                            # every visited class
    maximal: int = 0
    counts_by_size: Dict[int, int] = field(default_factory=dict)
    maximal_counts_by_size: Dict[int, int] = field(default_factory=dict)
    emitted_counts_by_size: Dict[int, int] = field(default_factory=dict)
    files: List[str] = field(default_factory=list)
    node_count: int = 0
    wall_time_seconds: float = 0.0
    diagnostics: Optional[Dict[str, Any]] = None  # set on aborted runs

    @property
    def complete(self) -> bool:
        return self.status == STATUS_COMPLETE

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary (JSON object keys as strings)"""
        data = {
            "parameters": self.parameters,
            "tool_version": self.tool_version,
            "certificate_format_version": self.certificate_format_version,
            "command": self.command,
            "status": self.status,
            "generated_at": self.generated_at,
            "classes": self.classes,
            "maximal": self.maximal,
            "counts_by_size": {str(k): v for k, v in self.counts_by_size.items()},
            "maximal_counts_by_size": {str(k): v for k, v in self.maximal_counts_by_size.items()},
            "emitted_counts_by_size": {str(k): v for k, v in self.emitted_counts_by_size.items()},
            "files": self.files,
            "node_count": self.node_count,
            "wall_time_seconds": self.wall_time_seconds,
        }
        if self.diagnostics is not None:
            data["diagnostics"] = self.diagnostics
        return data

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "CensusManifest":
        """Create from dictionary"""
        return cls(
            parameters=data.get("parameters", {}),
            tool_version=data.get("tool_version", ""),
            certificate_format_version=data.get("certificate_format_version", 0),
            command=data.get("command", ""),
            status=data.get("status", STATUS_COMPLETE),
            generated_at=data.get("generated_at", ""),
            classes=data.get("classes", 0),
            maximal=data.get("maximal", 0),
            counts_by_size=_int_keys(data.get("counts_by_size", {})),
            maximal_counts_by_size=_int_keys(data.get("maximal_counts_by_size", {})),
            emitted_counts_by_size=_int_keys(data.get("emitted_counts_by_size", {})),
            files=data.get("files", []),
            node_count=data.get("node_count", 0),
            wall_time_seconds=data.get("wall_time_seconds", 0.0),
            diagnostics=data.get("diagnostics"),
        )
