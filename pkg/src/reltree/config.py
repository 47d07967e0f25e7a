"""Application configuration.

Flat `key=value` files, overridable per key through RELTREE_<KEY>
environment variables. Lexicon paths default to the small files bundled
with the package so the tool works out of the box.
"""

import os
from dataclasses import dataclass, replace
from importlib import resources
from pathlib import Path
from typing import Iterable, Mapping, TextIO

from .errors import ConfigError, DomainError
from .ranking import Weights

DEFAULT_PORT = 8750
DEFAULT_MAX_RESULTS = 500

_PATH_KEYS = ("gazetteer", "synonyms", "stopwords", "corpus", "index")
_FLOAT_KEYS = (
    "weight_direct_keyword",
    "weight_direct_terminology",
    "weight_indirect_keyword",
    "weight_indirect_terminology",
    "bonus",
)
_INT_KEYS = ("levels", "port", "max_results")
KNOWN_KEYS = frozenset(_PATH_KEYS + _FLOAT_KEYS + _INT_KEYS)


@dataclass(frozen=True)
class AppConfig:
    gazetteer: Path | None = None
    synonyms: Path | None = None
    stopwords: Path | None = None
    corpus: Path | None = None
    index: Path | None = None
    weights: Weights = Weights()
    port: int = DEFAULT_PORT
    max_results: int = DEFAULT_MAX_RESULTS

    def validate(self) -> "AppConfig":
        try:
            self.weights.validate()
        except DomainError as exc:
            raise ConfigError(str(exc)) from exc
        if not (1 <= self.port <= 65535):
            raise ConfigError(f"port must be in 1..65535, got {self.port}")
        if self.max_results < 1:
            raise ConfigError(f"max_results must be >= 1, got {self.max_results}")
        return self


def _parse_pairs(lines: Iterable[str], origin: str) -> dict[str, str]:
    pairs: dict[str, str] = {}
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        key, sep, value = line.partition("=")
        if not sep:
            raise ConfigError(f"{origin} line {lineno}: expected key=value, got {line!r}")
        key = key.strip().lower()
        if key not in KNOWN_KEYS:
            raise ConfigError(f"{origin} line {lineno}: unknown key {key!r}")
        pairs[key] = value.strip()
    return pairs


def _env_overrides(env: Mapping[str, str]) -> dict[str, str]:
    pairs: dict[str, str] = {}
    for key in KNOWN_KEYS:
        value = env.get(f"RELTREE_{key.upper()}")
        if value is not None:
            pairs[key] = value
    return pairs


def _apply(config: AppConfig, pairs: Mapping[str, str], origin: str) -> AppConfig:
    weights = config.weights
    updates: dict = {}
    for key, value in pairs.items():
        if key in _PATH_KEYS:
            updates[key] = Path(value)
            continue
        if key in _FLOAT_KEYS:
            try:
                number = float(value)
            except ValueError:
                raise ConfigError(f"{origin}: {key} must be a number, got {value!r}") from None
            if key == "bonus":
                weights = replace(weights, bonus=number)
            else:
                weights = replace(weights, **{key.removeprefix("weight_"): number})
            continue
        try:
            number = int(value)
        except ValueError:
            raise ConfigError(f"{origin}: {key} must be an integer, got {value!r}") from None
        if key == "levels":
            weights = replace(weights, levels=number)
        else:
            updates[key] = number
    return replace(config, weights=weights, **updates)


def load_config(path: Path | None = None, env: Mapping[str, str] | None = None) -> AppConfig:
    """Build the effective config: defaults, then *path*, then environment."""
    config = AppConfig()
    if path is not None:
        try:
            with open(path, encoding="utf-8") as handle:
                config = _apply(config, _parse_pairs(handle, str(path)), str(path))
        except OSError as exc:
            raise ConfigError(f"cannot read config file {path}: {exc}") from exc
    environment = os.environ if env is None else env
    config = _apply(config, _env_overrides(environment), "environment")
    return config.validate()


def open_lexicon_file(configured: Path | None, bundled_name: str) -> TextIO:
    """Open a configured lexicon path, or the bundled default file."""
    if configured is not None:
        return open(configured, encoding="utf-8")
    return (resources.files("reltree") / "data" / bundled_name).open("r", encoding="utf-8")
