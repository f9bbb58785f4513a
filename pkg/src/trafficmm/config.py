"""Flat ``key = value`` run configuration.

Lines are ``key = value``; ``#`` starts a comment; blank lines are ignored.
Unknown keys, repeated keys and out-of-range values are errors. Relative
paths are resolved against the directory of the config file.
"""
from __future__ import annotations

import dataclasses
from dataclasses import dataclass, fields
from pathlib import Path

from .errors import ParseError, ValidationError

PATH_KEYS = ("train_path", "test_path", "text_sidecar", "text_replay", "out")
FORMATS = ("auto", "ts", "tsv", "matrix")


@dataclass
class RunConfig:
    # data
    train_path: str = ""
    test_path: str = ""
    data_format: str = "auto"
    window: int = 12
    stride: int = 12
    ffs_mph: float = 65.0
    split_mode: str = "archive"
    folds: int = 5
    val_fraction: float = 0.0
    # text
    text_topic: str = "urban traffic profile"
    text_background: str = "sensor readings sampled at a fixed interval"
    text_position: str = "unspecified location"
    text_item: str = "a daily series of counts"
    text_sidecar: str = ""
    text_replay: str = ""
    max_tokens: int = 128
    # architecture
    phi: float = 24.0
    embed_dim: int = 32
    fusion_dim: int = 128
    depth: int = 2
    taps: int = 9
    filters: int = 8
    pool: int = 3
    image_size: int = 64
    classifier_hidden: int = 128
    ts_pool: str = "flatten"
    feature_norm: str = "layer"
    # optimisation
    alpha: float = 0.1
    beta: float = 0.1
    gamma: float = 1.0
    tau: float = 0.07
    lr: float = 1e-4
    weight_decay: float = 0.01
    epochs: int = 50
    batch_size: int = 64
    warmup_fraction: float = 0.1
    # protocol
    repeats: int = 3
    seed: int = 0
    drop_vision: bool = False
    drop_text: bool = False
    drop_timeseries: bool = False
    out: str = "runs/default"

    def validate(self) -> "RunConfig":
        errs = []

        def need(ok, msg):
            if not ok:
                errs.append(msg)

        need(bool(self.train_path), "train_path is required")
        need(self.data_format in FORMATS, f"data_format must be one of {FORMATS}")
        need(self.split_mode in ("archive", "kfold"), "split_mode must be archive or kfold")
        need(self.split_mode != "archive" or bool(self.test_path), "split_mode = archive needs test_path")
        need(self.window >= 2 and self.stride >= 1, "window must be >= 2 and stride >= 1")
        need(self.ffs_mph > 0, "ffs_mph must be > 0")
        need(self.folds >= 2, "folds must be >= 2")
        need(0.0 <= self.val_fraction < 1.0, "val_fraction must be in [0, 1)")
        need(1 <= self.max_tokens <= 4096, "max_tokens must be in [1, 4096]")
        need(self.phi > 0, "phi must be > 0")
        for k in ("embed_dim", "fusion_dim", "depth", "filters", "pool", "image_size"):
            need(getattr(self, k) >= 1, f"{k} must be >= 1")
        need(self.taps >= 2, "taps must be >= 2")
        need(self.fusion_dim >= self.taps, "fusion_dim must be >= taps")
        need(self.image_size >= 4, "image_size must be >= 4")
        need(self.classifier_hidden >= 0, "classifier_hidden must be >= 0")
        need(self.ts_pool in ("flatten", "mean"), "ts_pool must be flatten or mean")
        need(self.feature_norm in ("layer", "none"), "feature_norm must be layer or none")
        for k in ("alpha", "beta", "gamma", "weight_decay"):
            need(getattr(self, k) >= 0, f"{k} must be >= 0")
        need(self.tau > 0 and self.lr > 0, "tau and lr must be > 0")
        need(self.epochs >= 1 and self.batch_size >= 1, "epochs and batch_size must be >= 1")
        need(0.0 <= self.warmup_fraction <= 1.0, "warmup_fraction must be in [0, 1]")
        need(self.repeats >= 1, "repeats must be >= 1")
        need(self.seed >= 0, "seed must be >= 0")
        need(self.drop_count <= 2, "at most two branches can be dropped")
        if errs:
            raise ValidationError("invalid config: " + "; ".join(errs))
        return self

    @property
    def drop_count(self) -> int:
        return int(self.drop_vision) + int(self.drop_text) + int(self.drop_timeseries)

    def replace(self, **changes) -> "RunConfig":
        return dataclasses.replace(self, **changes)

    def training_dict(self) -> dict:
        """Every field except the output location; stored inside checkpoints."""
        d = dataclasses.asdict(self)
        d.pop("out")
        return d


_TYPES = {f.name: f.type for f in fields(RunConfig)}


def _convert(key: str, raw: str, path, lineno: int):
    kind = _TYPES[key]
    try:
        if kind == "bool":
            low = raw.lower()
            if low not in ("true", "false", "1", "0", "yes", "no"):
                raise ValueError(raw)
            return low in ("true", "1", "yes")
        if kind == "int":
            return int(raw)
        if kind == "float":
            return float(raw)
    except ValueError:
        raise ParseError(f"{key}: cannot read {raw!r} as {kind}", path, lineno) from None
    return raw


def parse_config(text: str, base_dir=None, path="<config>") -> RunConfig:
    values = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, raw = line.partition("=")
        key, raw = key.strip(), raw.strip()
        if not sep:
            raise ParseError(f"expected 'key = value', got {line!r}", path, lineno)
        if key not in _TYPES:
            raise ParseError(f"unknown key {key!r}", path, lineno)
        if key in values:
            raise ParseError(f"duplicate key {key!r}", path, lineno)
        values[key] = _convert(key, raw, path, lineno)
    if base_dir is not None:
        for k in PATH_KEYS:
            if values.get(k) and not Path(values[k]).is_absolute():
                values[k] = str((Path(base_dir) / values[k]).resolve())
    return RunConfig(**values)


def load_config(path) -> RunConfig:
    path = Path(path)
    return parse_config(path.read_text(encoding="utf-8"), path.parent, path)


def dump_config(cfg: RunConfig) -> str:
    """Every key in declaration order; ``parse_config`` of the result gives back ``cfg``.

    Relative paths are written resolved against the working directory.
    """
    lines = []
    for f in fields(RunConfig):
        v = getattr(cfg, f.name)
        if f.name in PATH_KEYS and v:
            v = str(Path(v).resolve())
        elif isinstance(v, bool):
            v = "true" if v else "false"
        elif isinstance(v, float):
            v = repr(v)
        lines.append(f"{f.name} = {v}")
    return "\n".join(lines) + "\n"
