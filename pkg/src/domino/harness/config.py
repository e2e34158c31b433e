"""Flat ``key=value`` experiment configs; repeated keys build lists.

Example::

    # rotor sweep
    family = rotor:delta=4
    family = rotor:delta=6
    variant = cds
    algorithm = opt-inc
    baseline = off
    seed = 7
"""

from __future__ import annotations

from pathlib import Path

from ..domination import Variant
from ..errors import ConfigError
from .experiment import SOURCE_KINDS, ExperimentConfig, InstanceSource

_LIST_KEYS = {"variant", "algorithm", "baseline"}
_SCALAR_KEYS = {"cap_off", "cap_inc", "seed", "out", "format", "jobs"}


def parse_config(text: str) -> ExperimentConfig:
    cfg = ExperimentConfig()
    lists: dict[str, list[str]] = {k: [] for k in _LIST_KEYS}
    seen: set[str] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        key, sep, value = line.partition("=")
        key, value = key.strip().replace("-", "_"), value.strip()
        if not sep or not value:
            raise ConfigError(f"line {lineno}: expected key = value")
        if key in SOURCE_KINDS:
            cfg.sources.append(InstanceSource(key, value))
        elif key in _LIST_KEYS:
            lists[key].append(value)
        elif key in _SCALAR_KEYS:
            if key in seen:
                raise ConfigError(f"line {lineno}: {key} given twice")
            seen.add(key)
            _set_scalar(cfg, key, value, lineno)
        else:
            raise ConfigError(f"line {lineno}: unknown key {key!r}")
    try:
        if lists["variant"]:
            cfg.variants = [Variant.parse(v) for v in lists["variant"]]
    except ValueError as exc:
        raise ConfigError(str(exc)) from None
    if lists["algorithm"]:
        cfg.algorithms = lists["algorithm"]
    if lists["baseline"]:
        cfg.baselines = lists["baseline"]
    cfg.validate()
    return cfg


def _set_scalar(cfg: ExperimentConfig, key: str, value: str, lineno: int) -> None:
    if key in ("out",):
        cfg.out = Path(value)
    elif key == "format":
        cfg.format = value
    else:
        try:
            setattr(cfg, key, int(value))
        except ValueError:
            raise ConfigError(f"line {lineno}: {key} must be an integer") from None


def load_config(path: str | Path) -> ExperimentConfig:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc.strerror}") from None
    return parse_config(text)
