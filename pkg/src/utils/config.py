"""
Configuration management utilities
"""

import os
from typing import Any, Dict, Optional

import yaml

DEFAULT_CONFIG = {
    'reliability': {
        'max_bits': 30,
        'workers': 1
    },
    'monte_carlo': {
        'samples': 0,
        'seed': 0,
        'chunk_size': 100000
    },
    'report': {
        'precision': 6,
        'trace': False
    },
    'logging': {
        'level': 'WARNING',
        'log_file': None,
        'event_log': None
    }
}

DEFAULT_CONFIG_PATH = "config.yaml"


def load_config(config_path: Optional[str] = None) -> Dict[str, Any]:
    """
    Load configuration from YAML file

    Args:
        config_path: Path to configuration file; when None, config.yaml is
            used if present and the defaults otherwise

    Returns:
        Configuration dictionary
    """
    if config_path is None:
        if not os.path.exists(DEFAULT_CONFIG_PATH):
            return merge_dicts(DEFAULT_CONFIG, {})
        config_path = DEFAULT_CONFIG_PATH

    if not os.path.exists(config_path):
        raise FileNotFoundError(f"Configuration file not found: {config_path}")

    with open(config_path, 'r') as f:
        config = yaml.safe_load(f) or {}

    if not isinstance(config, dict):
        raise ValueError(f"Configuration file {config_path} must contain a mapping")

    # Merge with defaults for missing values
    return merge_dicts(DEFAULT_CONFIG, config)


def save_config(config_path: str, config: Dict[str, Any]) -> None:
    """
    Save configuration to YAML file

    Args:
        config_path: Path to save configuration
        config: Configuration dictionary
    """
    with open(config_path, 'w') as f:
        yaml.dump(config, f, default_flow_style=False)


def merge_dicts(default: Dict, override: Dict) -> Dict:
    """
    Recursively merge two dictionaries

    Args:
        default: Default dictionary
        override: Override dictionary

    Returns:
        Merged dictionary
    """
    result = {
        key: merge_dicts(value, {}) if isinstance(value, dict) else value
        for key, value in default.items()
    }

    for key, value in override.items():
        if key in result and isinstance(result[key], dict) and isinstance(value, dict):
            result[key] = merge_dicts(result[key], value)
        else:
            result[key] = value

    return result


def get_config_value(config: Dict[str, Any], key_path: str, default=None) -> Any:
    """
    Get configuration value using dot notation

    Args:
        config: Configuration dictionary
        key_path: Dot notation path (e.g., 'reliability.max_bits')
        default: Default value if not found

    Returns:
        Configuration value
    """
    value = config

    for key in key_path.split('.'):
        if isinstance(value, dict):
            value = value.get(key)
        else:
            return default

    return value if value is not None else default
