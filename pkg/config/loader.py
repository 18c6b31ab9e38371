from pathlib import Path
from typing import Any, Dict, List

import structlog
import yaml

logger = structlog.get_logger()


class ReferenceTablesConfig:
    _instance = None
    _config: Dict[str, Any] = {}

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super(ReferenceTablesConfig, cls).__new__(cls)
            cls._instance._load_config()
        return cls._instance

    def _load_config(self):
        """Loads the reference tables from YAML."""
        config_path = Path(__file__).parent / "reference_tables.yaml"
        if not config_path.exists():
            config_path = Path("config/reference_tables.yaml")

        try:
            if config_path.exists():
                with open(config_path, "r", encoding="utf-8") as f:
                    self._config = yaml.safe_load(f) or {}
                logger.debug("Loaded reference tables", path=str(config_path))
            else:
                logger.warning("Reference tables not found, using empty tables", path=str(config_path))
                self._config = {}
        except Exception as e:
            logger.error("Failed to load reference tables", path=str(config_path), error=str(e))
            self._config = {}

    @property
    def catalog_rows(self) -> Dict[str, List[Dict[str, Any]]]:
        return self._config.get("catalog", {})

    @property
    def realization_recipes(self) -> Dict[str, str]:
        return self._config.get("realization", {})

    @property
    def verification_defaults(self) -> Dict[str, int]:
        return self._config.get("verification", {})


# Global instance
reference_tables = ReferenceTablesConfig()
