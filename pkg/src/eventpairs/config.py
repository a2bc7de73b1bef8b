"""Flat key-value pipeline configuration.

Config files hold one ``key = value`` per line with ``#`` comments; any
key can be overridden by an ``EVENTPAIRS_<KEY>`` environment variable.
Unknown keys are rejected so typos fail loudly.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, fields
from pathlib import Path

from .errors import ConfigError

ENV_PREFIX = "EVENTPAIRS_"


@dataclass
class PipelineConfig:
    corpus: str = ""
    labels: str = ""
    unlabeled_corpus: str = ""
    topic: str = ""
    out_dir: str = ""
    window: int = 3
    alpha: float = 0.5
    test_fraction: float = 0.2
    split_seed: int = 13
    distractor_seed: int = 17
    distractor_mode: str = "types"
    grid_f: tuple[int, ...] = (2, 5, 10)
    grid_p: tuple[float, ...] = (0.6, 0.75, 0.9)
    grid_n: tuple[int, ...] = (1, 2, 3)
    precision_floor: float = 0.9
    min_freq: int = 5
    top_n: int = 100
    models: tuple[str, ...] = ("UNIGRAM", "BIGRAM", "SCP", "CP")
    pairs_model: str = "CP"
    counts_source: str = "auto"
    private_state_lexicon: str = ""
    ratings: str = ""
    exact_pair_filter: bool = False
    threads: int = 1

    def resolved(self) -> dict:
        out = {}
        for f in fields(self):
            value = getattr(self, f.name)
            out[f.name] = list(value) if isinstance(value, tuple) else value
        return out


def _parse_value(name: str, kind, raw: str):
    raw = raw.strip()
    try:
        if kind is int:
            return int(raw)
        if kind is float:
            return float(raw)
        if kind is bool:
            if raw.lower() in ("1", "true", "yes", "on"):
                return True
            if raw.lower() in ("0", "false", "no", "off"):
                return False
            raise ValueError(raw)
        if kind is str:
            return raw
        # tuple fields: comma separated, element type from the default
        if kind == "int_list":
            return tuple(int(x) for x in raw.split(",") if x.strip())
        if kind == "float_list":
            return tuple(float(x) for x in raw.split(",") if x.strip())
        if kind == "str_list":
            return tuple(x.strip() for x in raw.split(",") if x.strip())
    except ValueError:
        raise ConfigError(f"bad value for {name!r}: {raw!r}") from None
    raise AssertionError(kind)


_FIELD_KINDS = {
    "grid_f": "int_list",
    "grid_p": "float_list",
    "grid_n": "int_list",
    "models": "str_list",
}


def _field_kind(f):
    return _FIELD_KINDS.get(f.name, f.type if isinstance(f.type, type) else type(f.default))


def load_config(path, env=None) -> PipelineConfig:
    """Parse the config file, then apply environment overrides."""
    env = os.environ if env is None else env
    known = {f.name: f for f in fields(PipelineConfig)}
    cfg = PipelineConfig()
    text = Path(path).read_text(encoding="utf-8")
    for lineno, line in enumerate(text.splitlines(), start=1):
        body = line.split("#", 1)[0].strip()
        if not body:
            continue
        if "=" not in body:
            raise ConfigError(f"config line {lineno}: expected 'key = value'")
        key, _, raw = body.partition("=")
        key = key.strip()
        if key not in known:
            raise ConfigError(f"config line {lineno}: unknown key {key!r}")
        setattr(cfg, key, _parse_value(key, _field_kind(known[key]), raw))
    for name, f in known.items():
        env_key = ENV_PREFIX + name.upper()
        if env_key in env:
            setattr(cfg, name, _parse_value(name, _field_kind(f), env[env_key]))
    validate_config(cfg)
    return cfg


def validate_config(cfg: PipelineConfig) -> None:
    if not cfg.out_dir:
        raise ConfigError("out_dir is required")
    if cfg.window < 1:
        raise ConfigError(f"window must be >= 1, got {cfg.window}")
    if cfg.alpha < 0:
        raise ConfigError(f"alpha must be >= 0, got {cfg.alpha}")
    if not 0.0 < cfg.test_fraction < 1.0:
        raise ConfigError(f"test_fraction must be in (0, 1), got {cfg.test_fraction}")
    if cfg.distractor_mode not in ("types", "tokens"):
        raise ConfigError(f"distractor_mode must be types or tokens, got {cfg.distractor_mode!r}")
    for model in cfg.models:
        if model not in ("UNIGRAM", "BIGRAM", "SCP", "CP"):
            raise ConfigError(f"unknown model {model!r}")
    if cfg.pairs_model not in ("CP", "SCP"):
        raise ConfigError(f"pairs_model must be CP or SCP, got {cfg.pairs_model!r}")
    if cfg.min_freq < 1 or cfg.top_n < 1 or cfg.threads < 1:
        raise ConfigError("min_freq, top_n, and threads must be >= 1")
