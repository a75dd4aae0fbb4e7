# SPDX-License-Identifier: GPL-3.0-or-later
#
# Grundy Kit: maximizing colorings and self-stabilizing frequency assignment.
# Copyright (C) 2025 Grundy Kit contributors

import logging
import os
from typing import Any, Dict, Mapping, Optional

import yaml
from pydantic import BaseModel, Field, ValidationError, field_validator

from grundy_kit.coloring import ColoringKind
from grundy_kit.errors import InvalidInputError

logger = logging.getLogger(__name__)

LIMIT_ENV_VAR = "GRUNDY_KIT_LIMIT"


class SolverConfig(BaseModel):
    """Size limits of the exponential computations"""
    limit: int = Field(default=16, ge=1, description="Largest vertex count for exact proper/grundy")
    search_limit: int = Field(default=12, ge=1, description="Largest vertex count for exact partial_grundy/b_coloring")
    oracle_limit: int = Field(default=8, ge=1, description="Largest vertex count for the brute-force oracles")
    witness_limit: int = Field(default=16, ge=1, description="Largest k for binomial tree witnesses")

    def limit_for(self, kind: ColoringKind) -> int:
        if kind in (ColoringKind.PARTIAL_GRUNDY, ColoringKind.B_COLORING):
            return self.search_limit
        return self.limit


class SimulatorConfig(BaseModel):
    """Defaults for generated scenarios"""
    default_max_rounds: int = Field(default=500, ge=1, description="Round budget after the last event")
    default_avg_degree: float = Field(default=4.0, ge=1.0, le=10.0, description="Target average interference degree")
    area_side: float = Field(default=100.0, gt=0, description="Side of the deployment square (meters)")


class FeaturesConfig(BaseModel):
    """Feature configuration"""
    log_level: str = Field(default="WARNING", description="Logging level: DEBUG, INFO, WARNING, ERROR, CRITICAL, or DISABLED")
    default_format: str = Field(default="edge_list", description="Graph format when --format is not given")

    @field_validator('log_level')
    def validate_log_level(cls, v):
        valid_levels = ["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL", "DISABLED"]
        if v.upper() not in valid_levels:
            raise ValueError(f"log_level must be one of: {', '.join(valid_levels)}")
        return v.upper()

    @field_validator('default_format')
    def validate_default_format(cls, v):
        valid_formats = ["edge_list", "dimacs", "dot"]
        if v not in valid_formats:
            raise ValueError(f"default_format must be one of: {', '.join(valid_formats)}")
        return v


class AppConfig(BaseModel):
    """Application full configuration"""
    solver: SolverConfig = Field(default_factory=SolverConfig)
    simulator: SimulatorConfig = Field(default_factory=SimulatorConfig)
    features: FeaturesConfig = Field(default_factory=FeaturesConfig)


def parse_limit(value: Any, source: str) -> int:
    try:
        limit = int(str(value).strip())
    except ValueError:
        raise InvalidInputError(f"{source} must be a positive integer, got '{value}'")
    if limit < 1:
        raise InvalidInputError(f"{source} must be a positive integer, got {limit}")
    return limit


class ConfigLoader:
    """Configuration loader"""

    def __init__(self, config_path: str = "config.yaml", environ: Optional[Mapping[str, str]] = None):
        self.config_path = config_path
        self.environ = os.environ if environ is None else environ
        self._config: Optional[AppConfig] = None

    def load_config(self) -> AppConfig:
        """
        Load the YAML file, then apply the environment override.

        A missing file means defaults; an unreadable or invalid one is an error.
        """
        config_data: Dict[str, Any] = {}
        if os.path.exists(self.config_path):
            try:
                with open(self.config_path, 'r', encoding='utf-8') as f:
                    config_data = yaml.safe_load(f) or {}
            except yaml.YAMLError as e:
                raise InvalidInputError(f"Configuration file format error: {e}")
            except (OSError, UnicodeDecodeError) as e:
                raise InvalidInputError(f"Failed to read configuration file: {e}")
            if not isinstance(config_data, dict):
                raise InvalidInputError("Configuration file must contain a mapping")
        else:
            logger.debug(f"🔧 No configuration file at '{self.config_path}', using defaults")

        try:
            config = AppConfig(**config_data)
        except ValidationError as e:
            raise InvalidInputError(f"Configuration validation failed: {e}")

        override = self.environ.get(LIMIT_ENV_VAR)
        if override is not None and override.strip():
            limit = parse_limit(override, LIMIT_ENV_VAR)
            config.solver.limit = limit
            config.solver.search_limit = limit
            logger.info(f"🔧 {LIMIT_ENV_VAR} sets the exact solver limit to {limit}")

        self._config = config
        return self._config

    @property
    def config(self) -> AppConfig:
        """Get configuration object"""
        if self._config is None:
            self.load_config()
        return self._config

    def reload_config(self) -> AppConfig:
        """Force reload configuration from disk"""
        self._config = None
        return self.load_config()

    def get_log_level(self) -> str:
        return self.config.features.log_level


config_loader = ConfigLoader()
