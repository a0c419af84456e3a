# coding=utf-8
"""
Time Utility Module - Timezone-aware timestamps and wall-clock measurement
"""

import logging
import time
from datetime import datetime

import pytz

logger = logging.getLogger(__name__)

# Default timezone
DEFAULT_TIMEZONE = "UTC"


def get_configured_time(timezone: str = DEFAULT_TIMEZONE) -> datetime:
    """
    Get current time for the configured timezone

    Args:
        timezone: Timezone name, e.g., 'UTC', 'Europe/Brussels'

    Returns:
        Current time with timezone information
    """
    try:
        tz = pytz.timezone(timezone)
    except pytz.UnknownTimeZoneError:
        logger.warning("Unknown timezone '%s', using default %s", timezone, DEFAULT_TIMEZONE)
        tz = pytz.timezone(DEFAULT_TIMEZONE)
    return datetime.now(tz)


def format_timestamp(timezone: str = DEFAULT_TIMEZONE) -> str:
    """
    Format an ISO-8601 timestamp for manifests

    Args:
        timezone: Timezone name

    Returns:
        Timestamp string, e.g., '2026-10-19T14:03:11+02:00'
    """
    return get_configured_time(timezone).isoformat(timespec="seconds")


class Stopwatch:
    """Monotonic wall-clock stopwatch"""

    def __init__(self):
        self._start = time.monotonic()

    @property
    def elapsed(self) -> float:
        """Seconds since creation"""
        return time.monotonic() - self._start
