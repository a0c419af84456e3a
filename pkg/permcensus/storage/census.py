# coding=utf-8
"""
Census Directory Storage

Layout of a census directory:

    manifest.json                      parameters, counts, versions, file list
    summary.csv                        size,count of the emitted classes
    s<size>_<sha256 prefix>.code       one canonical representative per class

Aborted runs get a manifest with status "aborted" and the partial counts,
and no code files.
"""

import csv
import hashlib
import json
import logging
from pathlib import Path
from typing import List, Tuple, Union

from permcensus import CERTIFICATE_FORMAT_VERSION, __version__
from permcensus.core.code import Code, read_code_file, write_code_file
from permcensus.search.result import EnumerationResult
from permcensus.storage.manifest import STATUS_ABORTED, CensusManifest
from permcensus.utils.errors import CodeFormatError, ResourceCapExceeded
from permcensus.utils.time import DEFAULT_TIMEZONE, format_timestamp

logger = logging.getLogger(__name__)

MANIFEST_NAME = "manifest.json"
SUMMARY_NAME = "summary.csv"
CODE_SUFFIX = ".code"
DIGEST_PREFIX = 16


def code_file_name(size: int, certificate: bytes) -> str:
    """File name of a class representative: size, then the sha256 prefix of its certificate"""
    digest = hashlib.sha256(certificate).hexdigest()[:DIGEST_PREFIX]
    return f"s{size:03d}_{digest}{CODE_SUFFIX}"


class CensusWriter:
    """
    Census Directory Writer

    Writes one census per directory. Code files of an earlier run that are not
    part of the new census are removed, so the directory matches its manifest.
    """

    def __init__(self, out_dir: Union[str, Path], timezone: str = DEFAULT_TIMEZONE):
        """
        Initialize Census Writer

        Args:
            out_dir: Census directory (created on first write)
            timezone: Timezone of the manifest timestamp
        """
        self.out_dir = Path(out_dir)
        self.timezone = timezone

    def _manifest(self, parameters: dict, command: str) -> CensusManifest:
        return CensusManifest(
            parameters=parameters,
            command=command,
            tool_version=__version__,
            certificate_format_version=CERTIFICATE_FORMAT_VERSION,
            generated_at=format_timestamp(self.timezone),
        )

    def _write_manifest(self, manifest: CensusManifest) -> Path:
        self.out_dir.mkdir(parents=True, exist_ok=True)
        path = self.out_dir / MANIFEST_NAME
        with open(path, "w", encoding="utf-8") as f:
            json.dump(manifest.to_dict(), f, indent=2, sort_keys=True)
            f.write("\n")
        return path

    def _remove_stale_codes(self, keep: List[str]) -> None:
        kept = set(keep)
        stale = [p for p in self.out_dir.glob(f"*{CODE_SUFFIX}") if p.name not in kept]
        for path in stale:
            path.unlink()
        if stale:
            logger.info("Removed %d code files of an earlier run from %s", len(stale), self.out_dir)

    def write(self, result: EnumerationResult, command: str = "") -> CensusManifest:
        """
        Write a finished census

        Args:
            result: Search result; its emitted codes become the code files
            command: CLI command that produced it

        Returns:
            The manifest as written
        """
        manifest = self._manifest(result.parameters, command)
        manifest.classes = result.total_classes
        manifest.maximal = result.total_maximal
        manifest.counts_by_size = dict(result.counts_by_size)
        manifest.maximal_counts_by_size = dict(result.maximal_counts_by_size)
        manifest.emitted_counts_by_size = result.emitted_counts_by_size()
        manifest.node_count = result.node_count
        manifest.wall_time_seconds = round(result.wall_time, 3)

        self.out_dir.mkdir(parents=True, exist_ok=True)
        for code, certificate, maximal, group_size in zip(
                result.codes, result.certificates, result.maximal_flags, result.group_sizes):
            name = code_file_name(code.size, certificate)
            write_code_file(self.out_dir / name, code, comments=[
                f"certificate {certificate.hex()}",
                f"stabilizer order {group_size}",
                f"maximal {'yes' if maximal else 'no'}",
            ])
            manifest.files.append(name)
        self._remove_stale_codes(manifest.files)

        with open(self.out_dir / SUMMARY_NAME, "w", encoding="utf-8", newline="") as f:
            writer = csv.writer(f, lineterminator="\n")
            writer.writerow(["size", "count"])
            for size, count in manifest.emitted_counts_by_size.items():
                writer.writerow([size, count])

        self._write_manifest(manifest)
        logger.info("Census written to %s: %d code files", self.out_dir, len(manifest.files))
        return manifest

    def write_aborted(self, parameters: dict, error: ResourceCapExceeded, command: str = "") -> CensusManifest:
        """Write the diagnostic manifest of a run stopped by a resource cap"""
        manifest = self._manifest(parameters, command)
        manifest.status = STATUS_ABORTED
        diagnostics = dict(error.diagnostics)
        diagnostics["reason"] = error.message
        manifest.diagnostics = diagnostics
        manifest.classes = int(diagnostics.get("classes_found", 0))
        manifest.counts_by_size = {int(k): v for k, v in diagnostics.get("partial_counts_by_size", {}).items()}
        manifest.node_count = int(diagnostics.get("node_count", 0))
        manifest.wall_time_seconds = float(diagnostics.get("wall_time_seconds", 0.0))
        self._write_manifest(manifest)
        self._remove_stale_codes([])
        logger.warning("Aborted census manifest written to %s", self.out_dir)
        return manifest


def load_manifest(census_dir: Union[str, Path]) -> CensusManifest:
    """
    Read manifest.json of a census directory

    Raises:
        CodeFormatError: missing or unreadable manifest
    """
    path = Path(census_dir) / MANIFEST_NAME
    if not path.exists():
        raise CodeFormatError(str(path), "census manifest not found")
    try:
        with open(path, "r", encoding="utf-8") as f:
            return CensusManifest.from_dict(json.load(f))
    except json.JSONDecodeError as e:
        raise CodeFormatError(str(path), f"invalid JSON: {e}")


def load_census(census_dir: Union[str, Path]) -> Tuple[CensusManifest, List[Code]]:
    """
    Read a census directory back

    Returns:
        (manifest, codes in manifest file order)

    Raises:
        CodeFormatError: missing manifest, aborted census or unreadable code file
    """
    census_dir = Path(census_dir)
    manifest = load_manifest(census_dir)
    if not manifest.complete:
        raise CodeFormatError(str(census_dir), "census was aborted and has no code files")
    codes = [read_code_file(census_dir / name) for name in manifest.files]
    logger.debug("Loaded %d codes from %s", len(codes), census_dir)
    return manifest, codes
