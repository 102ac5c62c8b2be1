"""
========================================
ARF ENUMERATION - CONFIGURATION ARGUMENTS
========================================

This module provides the configuration management layer for the Arf
enumeration tools. It merges hard-coded defaults, the config.ini file,
command-line overrides and environment variables into a single mapping.

Features:
- Configuration file parsing (config.ini)
- Hierarchical configuration (CLI overrides config file)
- Environment override for worker parallelism (ARF_ENUM_JOBS, .env aware)
- Type-safe parameter handling
- Easy parameter retrieval

Configuration Hierarchy:
1. Default values (hardcoded fallbacks)
2. Configuration file values (config.ini)
3. Command-line arguments
4. Environment (ARF_ENUM_JOBS only, highest priority)

Supported Parameters:
- Enumeration parameters: split, use_reversal, max_twisted_rank
- Verification parameters: box_margin, chain_samples, seed, max_oracle_rank
- Output parameters: pretty
- Runtime parameters: jobs, progress

Author: LSL Team
Version: 1.0
Last Updated: 2026-10-19
"""

import configparser
import logging
import os

from dotenv import load_dotenv

logger = logging.getLogger(__name__)

DEFAULT_CONFIG_PATH = os.path.join(
    os.path.dirname(os.path.abspath(__file__)), "..", "Configs", "config.ini"
)

JOBS_ENV_VAR = "ARF_ENUM_JOBS"


def _parse_split(raw):
    if raw is None or str(raw).strip().lower() in ("", "auto", "none"):
        return None
    return int(raw)


class ConfigArgs:
    """
    Configuration management class that merges config file, CLI and environment.

    Attributes:
        config (configparser.ConfigParser): Configuration file parser
        defaults (dict): Final configuration values after all overrides

    Example:
        >>> config = ConfigArgs(overrides={"jobs": 4})
        >>> config.get("jobs")
        4
    """

    def __init__(self, config_path=None, overrides=None):
        """
        Initialize the configuration manager.

        Args:
            config_path (str, optional): Path to the configuration file.
                Defaults to Configs/config.ini next to the Enumeration folder.
            overrides (dict, optional): Values parsed from the command line.
                Keys mapped to None are ignored so that unset flags never
                shadow the file.
        """
        # Pick up a local .env before reading the environment
        load_dotenv()

        self.config_path = config_path or DEFAULT_CONFIG_PATH
        self.config = configparser.ConfigParser()
        read_files = self.config.read(self.config_path)
        if not read_files:
            logger.debug(f"No config file at {self.config_path}, using fallbacks")

        self.defaults = {
            # Enumeration parameters
            "split": _parse_split(
                self.config.get("enumeration", "split", fallback="auto")
            ),
            "use_reversal": self.config.getboolean(
                "enumeration", "use_reversal", fallback=True
            ),
            "max_twisted_rank": self.config.getint(
                "enumeration", "max_twisted_rank", fallback=8
            ),
            # Verification parameters
            "box_margin": self.config.getint("verify", "box_margin", fallback=2),
            "chain_samples": self.config.getint("verify", "chain_samples", fallback=8),
            "seed": self.config.getint("verify", "seed", fallback=42),
            "max_oracle_rank": self.config.getint(
                "verify", "max_oracle_rank", fallback=4
            ),
            # Output parameters
            "pretty": self.config.getboolean("output", "pretty", fallback=False),
            # Runtime parameters
            "jobs": self.config.getint("runtime", "jobs", fallback=1),
            "progress": self.config.getboolean("runtime", "progress", fallback=True),
        }

        # CLI values overwrite config.ini when present
        for key, value in (overrides or {}).items():
            if value is not None:
                self.defaults[key] = value

        env_jobs = os.getenv(JOBS_ENV_VAR)
        if env_jobs:
            try:
                self.defaults["jobs"] = int(env_jobs)
            except ValueError:
                logger.warning(f"Ignoring non-integer {JOBS_ENV_VAR}={env_jobs!r}")

        if self.defaults["jobs"] < 1:
            raise ValueError(f"jobs must be positive, got {self.defaults['jobs']}")

    def get(self, key):
        """
        Retrieve a specific configuration value.

        Args:
            key (str): Configuration parameter name

        Returns:
            Any: Configuration value or None if not found
        """
        return self.defaults.get(key, None)

    def __repr__(self):
        return str(self.defaults)
