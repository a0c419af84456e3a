# coding=utf-8
"""
Canon Module - Colored graph, canonical labeling and stabilizers
"""

from permcensus.canon.graph import ColoredGraph, build_graph, reconstruct_code
from permcensus.canon.labeling import (
    CERTIFICATE_FORMAT_VERSION,
    CanonicalForm,
    canonical_form,
    canonical_form_of_graph,
    canonical_representative,
    canonical_code,
    encode_certificate,
)
from permcensus.canon.stabilizer import find_isometry, stabilizer, vertex_map_to_isometry

__all__ = [
    "ColoredGraph",
    "build_graph",
    "reconstruct_code",
    "CERTIFICATE_FORMAT_VERSION",
    "CanonicalForm",
    "canonical_form",
    "canonical_form_of_graph",
    "canonical_representative",
    "canonical_code",
    "encode_certificate",
    "find_isometry",
    "stabilizer",
    "vertex_map_to_isometry",
]
