# coding=utf-8
"""
Group Module - The isometry group Iso(n) of (Sym(n), d_H) and brute-force oracles
"""

from permcensus.group.isometry import (
    Isometry,
    apply,
    compose_isometries,
    invert_isometry,
    apply_to_code,
    iso_group_order,
    all_isometries,
    isometry_closure,
)
from permcensus.group.oracle import (
    are_isometric_bruteforce,
    stabilizer_bruteforce,
    classes_bruteforce,
)

__all__ = [
    "Isometry",
    "apply",
    "compose_isometries",
    "invert_isometry",
    "apply_to_code",
    "iso_group_order",
    "all_isometries",
    "isometry_closure",
    "are_isometric_bruteforce",
    "stabilizer_bruteforce",
    "classes_bruteforce",
]
