# coding=utf-8
"""
Certificate Registry

Deduplication map of isometry classes keyed by canonical certificate.
"""

from threading import Lock
from typing import Any, Dict, List, Optional, Tuple


class CertificateRegistry:
    """Certificate registry with atomic insert-if-absent"""

    def __init__(self):
        """Initialize registry"""
        self._entries: Dict[bytes, Any] = {}
        self._lock = Lock()

    def insert_if_absent(self, certificate: bytes, value: Any) -> bool:
        """
        Register a class

        Args:
            certificate: Canonical certificate
            value: Record stored for a new class

        Returns:
            True if the certificate was new and value was stored
        """
        with self._lock:
            if certificate in self._entries:
                return False
            self._entries[certificate] = value
            return True

    def get(self, certificate: bytes) -> Optional[Any]:
        """Stored record, or None"""
        with self._lock:
            return self._entries.get(certificate)

    def __contains__(self, certificate: bytes) -> bool:
        with self._lock:
            return certificate in self._entries

    def __len__(self) -> int:
        with self._lock:
            return len(self._entries)

    def items(self) -> List[Tuple[bytes, Any]]:
        """Snapshot of (certificate, record) pairs, in certificate order"""
        with self._lock:
            return sorted(self._entries.items(), key=lambda item: item[0])

    def values(self) -> List[Any]:
        return [value for _, value in self.items()]
