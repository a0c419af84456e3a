# coding=utf-8
"""
Storage Module - Census directories (manifest, code files, CSV summary)
"""

from permcensus.storage.census import (
    CensusWriter,
    code_file_name,
    load_census,
    load_manifest,
)
from permcensus.storage.manifest import STATUS_ABORTED, STATUS_COMPLETE, CensusManifest

__all__ = [
    "CensusWriter",
    "code_file_name",
    "load_census",
    "load_manifest",
    "CensusManifest",
    "STATUS_ABORTED",
    "STATUS_COMPLETE",
]
