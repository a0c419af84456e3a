# coding=utf-8
"""
Result Formatting Module

Renders census results and single-value answers as text, JSON or CSV for
standard output. Census directories are written by the storage module.
"""

import csv
import io
import json
from typing import Any, Dict, List, Sequence

from permcensus.search.result import EnumerationResult
from permcensus.utils.errors import InvalidParameterError


def _headline(result: EnumerationResult) -> str:
    parameters = result.parameters
    if parameters.get("balanced"):
        return f"balanced classes: {len(result.codes)} (r={parameters['r']})"
    if parameters.get("algorithm") == "slice":
        return f"classes of size {parameters['size']}: {len(result.codes)}"
    return f"classes: {result.total_classes}, maximal: {result.total_maximal}"


def census_rows(result: EnumerationResult) -> List[List[Any]]:
    """size, classes, maximal classes, emitted classes per size"""
    emitted = result.emitted_counts_by_size()
    return [
        [size, count, result.maximal_counts_by_size.get(size, 0), emitted.get(size, 0)]
        for size, count in result.counts_by_size.items()
    ]


def format_census(result: EnumerationResult, fmt: str = "text") -> str:
    """
    Render a census result

    Args:
        result: Search result
        fmt: "text" (headline plus per-size table), "json" (summary) or
            "csv" (one row per size)

    Returns:
        Rendered string ending with a newline
    """
    if fmt == "json":
        return json.dumps(result.summary(), indent=2, sort_keys=True) + "\n"
    if fmt == "csv":
        return _csv([["size", "classes", "maximal", "emitted"]] + census_rows(result))
    if fmt != "text":
        raise InvalidParameterError(f"Unknown output format '{fmt}'", suggestion="Use json, csv or text")

    lines = [_headline(result)]
    lines.append(f"{'size':>6} {'classes':>9} {'maximal':>9}")
    for size, count, maximal, _ in census_rows(result):
        lines.append(f"{size:>6} {count:>9} {maximal:>9}")
    lines.append(f"nodes: {result.node_count}, wall time: {result.wall_time:.2f}s")
    return "\n".join(lines) + "\n"


def format_mapping(data: Dict[str, Any], fmt: str = "text") -> str:
    """
    Render a flat answer (mu, isometric, canon, invariants)

    Values that are lists or dicts are JSON-encoded in text and CSV output.
    """
    if fmt == "json":
        return json.dumps(data, indent=2, sort_keys=True, default=str) + "\n"

    def _cell(value: Any) -> str:
        if isinstance(value, (list, dict)):
            return json.dumps(value, sort_keys=True, default=str)
        return str(value)

    if fmt == "csv":
        return _csv([["key", "value"]] + [[key, _cell(value)] for key, value in data.items()])
    if fmt != "text":
        raise InvalidParameterError(f"Unknown output format '{fmt}'", suggestion="Use json, csv or text")
    return "".join(f"{key}: {_cell(value)}\n" for key, value in data.items())


def format_table(header: Sequence[str], rows: Sequence[Sequence[Any]], fmt: str = "text") -> str:
    """Render a table (efficiency study, slice types)"""
    if fmt == "json":
        return json.dumps([dict(zip(header, row)) for row in rows], indent=2, default=str) + "\n"
    if fmt == "csv":
        return _csv([list(header)] + [list(row) for row in rows])
    if fmt != "text":
        raise InvalidParameterError(f"Unknown output format '{fmt}'", suggestion="Use json, csv or text")
    cells = [[str(c) for c in header]] + [[str(c) for c in row] for row in rows]
    widths = [max(len(row[i]) for row in cells) for i in range(len(header))]
    return "".join(" ".join(c.rjust(w) for c, w in zip(row, widths)) + "\n" for row in cells)


def _csv(rows: Sequence[Sequence[Any]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerows(rows)
    return buffer.getvalue()
