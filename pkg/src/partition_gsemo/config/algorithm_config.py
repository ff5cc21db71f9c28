"""
Algorithm description loader.

Loads display names and descriptions from YAML for report footers and CLI output.
"""

import logging
from pathlib import Path
from typing import Dict, Optional

import yaml

from partition_gsemo.config.settings import settings

logger = logging.getLogger(__name__)


class AlgorithmConfig:
    """
    Loads and provides algorithm descriptions from YAML config.
    """

    def __init__(self, config_path: Optional[Path] = None):
        """
        Initialize algorithm config loader.

        Args:
            config_path: Path to algorithm_descriptions.yaml (defaults to the packaged file)
        """
        if config_path is None:
            config_path = settings.descriptions_file

        self.config_path = config_path
        self.algorithms: Dict = {}
        self.statistics_note = ""
        self._load_config()

    def _load_config(self):
        """Load algorithm descriptions from YAML file."""
        try:
            with open(self.config_path, "r", encoding="utf-8") as f:
                data = yaml.safe_load(f) or {}
            self.algorithms = data.get("algorithms", {})
            self.statistics_note = (data.get("statistics") or {}).get("description", "").strip()
            logger.debug(f"Loaded {len(self.algorithms)} algorithm descriptions")

        except FileNotFoundError:
            logger.warning(f"Algorithm config file not found: {self.config_path}")
            self.algorithms = {}

        except yaml.YAMLError as e:
            logger.error(f"Error loading algorithm config: {e}")
            self.algorithms = {}

    def get_description(self, algorithm_key: str) -> str:
        """
        Get the description of an algorithm.

        Args:
            algorithm_key: Algorithm tag (e.g., 'greedy', 'gsemo')

        Returns:
            Description string, or empty string if not found
        """
        if algorithm_key not in self.algorithms:
            logger.warning(f"Algorithm '{algorithm_key}' not found in config")
            return ""
        return self.algorithms[algorithm_key].get("description", "").strip()

    def get_name(self, algorithm_key: str) -> str:
        """Display name, or the key itself if not found."""
        if algorithm_key not in self.algorithms:
            return algorithm_key
        return self.algorithms[algorithm_key].get("name", algorithm_key)

    def list_algorithms(self) -> list:
        return list(self.algorithms.keys())
