# coding=utf-8
"""
Config Loader Module

Responsible for loading configuration from the YAML file and environment variables.
"""

import logging
import os
from pathlib import Path
from typing import Any, Dict, Optional

import yaml

logger = logging.getLogger(__name__)

DEFAULT_CONFIG_PATH = "config/config.yaml"


def _get_env_int(key: str) -> Optional[int]:
    """Get integer value from environment variable, return None if not set or invalid"""
    value = os.environ.get(key, "").strip()
    if not value:
        return None
    try:
        return int(value)
    except ValueError:
        logger.warning("Ignoring non-integer %s=%r", key, value)
        return None


def _get_env_float(key: str) -> Optional[float]:
    """Get float value from environment variable, return None if not set or invalid"""
    value = os.environ.get(key, "").strip()
    if not value:
        return None
    try:
        return float(value)
    except ValueError:
        logger.warning("Ignoring non-numeric %s=%r", key, value)
        return None


def _get_env_str(key: str, default: str = "") -> str:
    """Get string value from environment variable"""
    return os.environ.get(key, "").strip() or default


def _first_set(*values: Any) -> Any:
    """First value that is not None"""
    for value in values:
        if value is not None:
            return value
    return None


def _load_app_config(config_data: Dict) -> Dict:
    """Load App Config"""
    app_config = config_data.get("app", {}) or {}
    return {
        "TIMEZONE": _get_env_str("PERMCENSUS_TIMEZONE") or app_config.get("timezone", "UTC"),
    }


def _load_search_config(config_data: Dict) -> Dict:
    """Load Search Config"""
    search = config_data.get("search", {}) or {}
    return {
        "JOBS": _first_set(_get_env_int("PERMCENSUS_JOBS"), search.get("jobs"), 1),
        "MAX_NODES": _first_set(_get_env_int("PERMCENSUS_MAX_NODES"), search.get("max_nodes"), 0),
        "MAX_SECONDS": _first_set(_get_env_float("PERMCENSUS_MAX_SECONDS"), search.get("max_seconds"), 0),
        "PROGRESS_INTERVAL": search.get("progress_interval", 1.0),
        "SPLIT_DEPTH": search.get("split_depth", 3),
        "STABILIZER_CHILD_PRUNING": search.get("stabilizer_child_pruning", True),
    }


def _load_output_config(config_data: Dict) -> Dict:
    """Load Output Config"""
    output = config_data.get("output", {}) or {}
    return {
        "OUTPUT_DIR": _get_env_str("PERMCENSUS_OUTPUT_DIR") or output.get("dir", "") or "",
        "FORMAT": _get_env_str("PERMCENSUS_FORMAT") or output.get("format", "text"),
    }


def _load_oracle_config(config_data: Dict) -> Dict:
    """Load Brute-force Oracle Config"""
    oracle = config_data.get("oracle", {}) or {}
    return {
        "MAX_ISOMETRY_DEGREE": oracle.get("max_isometry_degree", 5),
        "MAX_STABILIZER_DEGREE": oracle.get("max_stabilizer_degree", 4),
    }


def load_config(config_path: Optional[str] = None) -> Dict[str, Any]:
    """
    Load Configuration

    Args:
        config_path: Path to config file, defaults to PERMCENSUS_CONFIG env var or config/config.yaml

    Returns:
        Dict containing all configurations. A missing file yields the built-in
        defaults (still subject to environment overrides).

    Raises:
        FileNotFoundError: an explicitly given config file does not exist
    """
    explicit = config_path is not None or bool(os.environ.get("PERMCENSUS_CONFIG"))
    if config_path is None:
        config_path = os.environ.get("PERMCENSUS_CONFIG", DEFAULT_CONFIG_PATH)

    config_data: Dict = {}
    if Path(config_path).exists():
        with open(config_path, "r", encoding="utf-8") as f:
            config_data = yaml.safe_load(f) or {}
        logger.debug("Config file loaded: %s", config_path)
    elif explicit:
        raise FileNotFoundError(f"Config file {config_path} not found")
    else:
        logger.debug("No config file at %s, using built-in defaults", config_path)

    config: Dict[str, Any] = {}
    config.update(_load_app_config(config_data))
    config["SEARCH"] = _load_search_config(config_data)
    config.update(_load_output_config(config_data))
    config["ORACLE"] = _load_oracle_config(config_data)
    return config
