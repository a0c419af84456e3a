# coding=utf-8
"""
PermCensus - Permutation code enumeration and classification

Generates every (n,d)-permutation code up to isometry, the maximal and
r-balanced ones, and the invariants used to tell classes apart.
"""

__version__ = "1.0.0"

# Bumped whenever the certificate byte layout changes
CERTIFICATE_FORMAT_VERSION = 1

__all__ = ["__version__", "CERTIFICATE_FORMAT_VERSION"]
