# coding=utf-8
"""
Search Module - Isomorph-free generation, clique search and slices
"""

from permcensus.search.canaug import canonical_augmentation, enumerate_balanced, occurrence_filter
from permcensus.search.clique import enumerate_cliques, max_clique, max_code, max_code_size
from permcensus.search.genbylist import genbylist
from permcensus.search.orbits import OrbitGraph, build_orbit_graph, generate_group, orbit_clique_search
from permcensus.search.registry import CertificateRegistry
from permcensus.search.result import ClassRecord, EnumerationResult, SearchBudget
from permcensus.search.slices import kloeve65, slice_census, slice_types
from permcensus.search.space import (
    SymmetricGroup,
    get_space,
    is_maximal,
    neighborhood_size,
    stabilizer_orbits,
    vd_set,
)

__all__ = [
    "canonical_augmentation",
    "enumerate_balanced",
    "occurrence_filter",
    "enumerate_cliques",
    "max_clique",
    "max_code",
    "max_code_size",
    "genbylist",
    "OrbitGraph",
    "build_orbit_graph",
    "generate_group",
    "orbit_clique_search",
    "CertificateRegistry",
    "ClassRecord",
    "EnumerationResult",
    "SearchBudget",
    "kloeve65",
    "slice_census",
    "slice_types",
    "SymmetricGroup",
    "get_space",
    "is_maximal",
    "neighborhood_size",
    "stabilizer_orbits",
    "vd_set",
]
