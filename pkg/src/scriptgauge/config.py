"""Flat key=value run configuration.

One `key = value` pair per line, '#' comments allowed. List-valued keys
(c_grid, blocks, stopwords) take comma-separated entries. Relative lexicon
paths are resolved against the config file's directory at load time.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, replace
from pathlib import Path

from .errors import UsageError

_BOOL_VALUES = {"true": True, "false": False, "1": True, "0": False, "yes": True, "no": False}


@dataclass
class PipelineConfig:
    seed: int = 0
    top_k: int = 500
    window_pct: float = 1.0
    n_perm: int = 499
    k_clusters: int = 10
    c_grid: tuple[float, ...] = (0.01, 0.1, 1.0, 10.0, 100.0)
    blocks: tuple[str, ...] = ()
    min_character_tokens: int = 100
    svm_epochs: int = 100
    activity_feature: str = "raw"
    stratified: bool = False
    workers: int = 1
    stopwords: tuple[str, ...] = ()
    vad_lexicon: str = ""
    intensity_lexicon: str = ""
    category_lexicon: str = ""

    def to_dict(self) -> dict:
        data = asdict(self)
        for key in ("c_grid", "blocks", "stopwords"):
            data[key] = list(data[key])
        return data

    @classmethod
    def from_dict(cls, data: dict) -> "PipelineConfig":
        kwargs = dict(data)
        for key in ("c_grid", "blocks", "stopwords"):
            if key in kwargs:
                kwargs[key] = tuple(kwargs[key])
        unknown = set(kwargs) - {f for f in cls.__dataclass_fields__}
        if unknown:
            raise UsageError(f"unknown config key(s): {', '.join(sorted(unknown))}")
        return cls(**kwargs)

    def with_blocks(self, blocks) -> "PipelineConfig":
        return replace(self, blocks=tuple(blocks))


def _coerce(key: str, raw: str):
    field_type = {
        "seed": int,
        "top_k": int,
        "n_perm": int,
        "k_clusters": int,
        "min_character_tokens": int,
        "svm_epochs": int,
        "workers": int,
        "window_pct": float,
        "activity_feature": str,
        "vad_lexicon": str,
        "intensity_lexicon": str,
        "category_lexicon": str,
    }
    if key in field_type:
        try:
            return field_type[key](raw)
        except ValueError as exc:
            raise UsageError(f"config key {key!r}: cannot parse {raw!r}") from exc
    if key == "stratified":
        if raw.lower() not in _BOOL_VALUES:
            raise UsageError(f"config key {key!r}: expected a boolean, got {raw!r}")
        return _BOOL_VALUES[raw.lower()]
    if key == "c_grid":
        try:
            return tuple(float(part) for part in raw.split(",") if part.strip())
        except ValueError as exc:
            raise UsageError(f"config key {key!r}: cannot parse {raw!r}") from exc
    if key in ("blocks", "stopwords"):
        return tuple(part.strip() for part in raw.split(",") if part.strip())
    raise UsageError(f"unknown config key {key!r}")


def load_config(path) -> PipelineConfig:
    """Read a config file; unknown keys are an error, missing keys default."""
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read config file {path}: {exc}") from exc
    values: dict = {}
    for line_no, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        key, sep, raw = line.partition("=")
        if not sep:
            raise UsageError(f"{path}:{line_no}: expected 'key = value', got {line!r}")
        key = key.strip()
        values[key] = _coerce(key, raw.strip())
    config = PipelineConfig(**values)
    base = path.parent
    resolved = {}
    for key in ("vad_lexicon", "intensity_lexicon", "category_lexicon"):
        value = getattr(config, key)
        if value:
            resolved[key] = str((base / value).resolve()) if not Path(value).is_absolute() else value
    if resolved:
        config = replace(config, **resolved)
    if config.seed < 0:
        raise UsageError("seed must be non-negative")
    return config


def save_config(config: PipelineConfig, path) -> None:
    lines = []
    for key, value in config.to_dict().items():
        if isinstance(value, list):
            value = ",".join(str(v) for v in value)
        elif isinstance(value, bool):
            value = "true" if value else "false"
        lines.append(f"{key} = {value}")
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")
