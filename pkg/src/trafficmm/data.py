"""Dataset ingestion: UCR archives, loop-detector speed matrices, labels, splits."""
from __future__ import annotations

import csv
import json
import logging
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from .errors import ParseError, ValidationError

log = logging.getLogger(__name__)

UNLABELED = -1
MISSING_TOKENS = {"?", "nan", "NaN", "NAN", ""}
SPLIT_FORMAT = "trafficmm-splits/1"

LOW, MODERATE, HIGH = 0, 1, 2
CONGESTION_NAMES = {LOW: "Low", MODERATE: "Moderate", HIGH: "High"}


@dataclass
class SeriesMeta:
    source_id: str = ""
    start: str | int | None = None
    period: float | None = None
    units: str = ""
    fully_missing: bool = False


@dataclass
class TimeSeriesInstance:
    values: np.ndarray  # [length, channels]
    label: int = UNLABELED
    meta: SeriesMeta = field(default_factory=SeriesMeta)

    def __post_init__(self):
        v = np.asarray(self.values, dtype=np.float64)
        if v.ndim == 1:
            v = v[:, None]
        if v.ndim != 2 or v.shape[0] < 2:
            raise ValidationError(f"instance values must be [length>=2, channels], got {v.shape}")
        self.values = v

    @property
    def length(self) -> int:
        return self.values.shape[0]

    @property
    def channels(self) -> int:
        return self.values.shape[1]

    @property
    def labeled(self) -> bool:
        return self.label != UNLABELED


@dataclass
class ParsedArchive:
    instances: list[TimeSeriesInstance]
    class_count: int
    label_map: dict[str, int]
    name: str = ""


def interpolate_missing(x: np.ndarray) -> np.ndarray:
    """Linear interpolation over NaNs along axis 0, per column; edges take the nearest value.

    Columns with no observed value are left as NaN.
    """
    x = np.array(x, dtype=np.float64, copy=True)
    if x.ndim == 1:
        return interpolate_missing(x[:, None])[:, 0]
    idx = np.arange(x.shape[0])
    for c in range(x.shape[1]):
        col = x[:, c]
        bad = np.isnan(col)
        if bad.any() and not bad.all():
            col[bad] = np.interp(idx[bad], idx[~bad], col[~bad])
    return x


# --- UCR / UEA archives -------------------------------------------------------

_REQUIRED_DIRECTIVES = ("problemname", "classlabel", "data")


def _parse_value(tok: str, path, lineno: int) -> float:
    tok = tok.strip()
    if tok in MISSING_TOKENS:
        return math.nan
    try:
        return float(tok)
    except ValueError:
        raise ParseError(f"non-numeric value {tok!r}", path, lineno) from None


def parse_ucr_ts(path, label_map: dict[str, int] | None = None) -> ParsedArchive:
    """Parse a ``.ts`` archive file (header directives, ``@data``, one record per line).

    Labels map to contiguous ids in order of first appearance unless ``label_map``
    is given (use the TRAIN map when reading the matching TEST file).
    """
    path = Path(path)
    directives: dict[str, str] = {}
    instances: list[TimeSeriesInstance] = []
    fixed_map = label_map is not None
    label_map = dict(label_map) if label_map else {}
    declared: list[str] | None = None
    has_labels = True
    in_data = False
    with path.open("r", encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            if not in_data:
                if not line.startswith("@"):
                    raise ParseError("record before @data directive", path, lineno)
                key, _, rest = line[1:].partition(" ")
                key = key.lower()
                directives[key] = rest.strip()
                if key == "classlabel":
                    parts = rest.split()
                    has_labels = bool(parts) and parts[0].lower() == "true"
                    declared = parts[1:] if has_labels else []
                if key == "data":
                    missing = [d for d in _REQUIRED_DIRECTIVES if d not in directives]
                    if missing:
                        raise ParseError(f"missing header directive(s): {', '.join('@' + m for m in missing)}",
                                         path, lineno)
                    in_data = True
                continue
            fields = line.split(":")
            label_tok = None
            if has_labels:
                if len(fields) < 2:
                    raise ParseError("record has no class label", path, lineno)
                label_tok = fields[-1].strip()
                fields = fields[:-1]
            channels = [[_parse_value(t, path, lineno) for t in f.split(",")] for f in fields]
            lengths = {len(c) for c in channels}
            if len(lengths) != 1:
                raise ParseError(f"ragged channel lengths {sorted(lengths)} within record", path, lineno)
            values = np.array(channels, dtype=np.float64).T
            if np.isnan(values).any():
                values = interpolate_missing(values)
                if np.isnan(values).any():
                    raise ParseError("channel with no observed values", path, lineno)
            label = UNLABELED
            if label_tok is not None:
                if declared and label_tok not in declared:
                    raise ParseError(f"unknown label token {label_tok!r}", path, lineno)
                if label_tok not in label_map:
                    if fixed_map:
                        raise ParseError(f"label {label_tok!r} not in the supplied label map", path, lineno)
                    label_map[label_tok] = len(label_map)
                label = label_map[label_tok]
            meta = SeriesMeta(source_id=f"{directives.get('problemname', path.stem)}#{len(instances)}")
            try:
                instances.append(TimeSeriesInstance(values, label, meta))
            except ValidationError as exc:
                raise ParseError(str(exc), path, lineno) from None
    if not in_data:
        missing = [d for d in _REQUIRED_DIRECTIVES if d not in directives]
        raise ParseError(f"missing header directive(s): {', '.join('@' + m for m in missing)}", path)
    class_count = len(label_map) if has_labels else 0
    return ParsedArchive(instances, class_count, label_map, directives.get("problemname", ""))


def parse_ucr_tsv(path, label_map: dict[str, int] | None = None) -> ParsedArchive:
    """Parse the 2018 UCR ``.tsv`` layout (label first, tab-separated, ``NaN`` missing)."""
    path = Path(path)
    fixed_map = label_map is not None
    label_map = dict(label_map) if label_map else {}
    instances = []
    with path.open("r", encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            if not raw.strip():
                continue
            toks = raw.rstrip("\n").split("\t")
            label_tok = toks[0].strip()
            if label_tok not in label_map:
                if fixed_map:
                    raise ParseError(f"label {label_tok!r} not in the supplied label map", path, lineno)
                label_map[label_tok] = len(label_map)
            vals = np.array([_parse_value(t, path, lineno) for t in toks[1:]])
            # trailing NaNs pad variable-length series
            last = np.flatnonzero(~np.isnan(vals))
            if last.size == 0:
                raise ParseError("record with no observed values", path, lineno)
            vals = interpolate_missing(vals[: last[-1] + 1])
            meta = SeriesMeta(source_id=f"{path.stem}#{len(instances)}")
            instances.append(TimeSeriesInstance(vals, label_map[label_tok], meta))
    return ParsedArchive(instances, len(label_map), label_map, path.stem.rsplit("_", 1)[0])


def load_archive(path, label_map=None) -> ParsedArchive:
    path = Path(path)
    if path.suffix.lower() == ".tsv":
        return parse_ucr_tsv(path, label_map)
    return parse_ucr_ts(path, label_map)


# --- speed matrices -------------------------------------------------------------

def _is_number(tok: str) -> bool:
    try:
        float(tok)
    except ValueError:
        return False
    return True


def _looks_like_header(cells: list[str]) -> bool:
    first = cells[0].strip()
    if not first:
        return True
    if any(not _is_number(c) for c in cells[1:] if c.strip()):
        return True
    # a non-numeric first cell is a timestamp when it carries digits, else a column title
    return not _is_number(first) and not any(ch.isdigit() for ch in first)


def load_speed_matrix(path, window: int = 12, stride: int = 12, delimiter: str = ",",
                      units: str = "mph") -> list[TimeSeriesInstance]:
    """Slice a ``timestamps x sensors`` speed matrix into unlabeled windows.

    A non-numeric first row is taken as a header of sensor ids; a non-numeric
    first column is taken as a timestamp index. Zero readings count as missing
    and are interpolated inside each window; fully-missing windows are dropped.
    """
    if window < 2:
        raise ValidationError(f"window must be >= 2, got {window}")
    if stride < 1:
        raise ValidationError(f"stride must be >= 1, got {stride}")
    path = Path(path)
    with path.open("r", encoding="utf-8", newline="") as fh:
        rows = [(i, r) for i, r in enumerate(csv.reader(fh, delimiter=delimiter), start=1) if r]
    if not rows:
        raise ParseError("empty matrix file", path)
    header = None
    if _looks_like_header(rows[0][1]):
        header = [t.strip() for t in rows[0][1]]
        rows = rows[1:]
    if not rows:
        raise ParseError("matrix has a header but no data rows", path)
    has_index = not _is_number(rows[0][1][0])
    timestamps = []
    data = []
    width = None
    for lineno, r in rows:
        cells = r[1:] if has_index else r
        if has_index:
            timestamps.append(r[0].strip())
        if width is None:
            width = len(cells)
        elif len(cells) != width:
            raise ParseError(f"expected {width} columns, found {len(cells)}", path, lineno)
        try:
            data.append([float(c) if c.strip() not in MISSING_TOKENS else math.nan for c in cells])
        except ValueError:
            bad = next(c for c in cells if not _is_number(c))
            raise ParseError(f"non-numeric cell {bad!r}", path, lineno) from None
    mat = np.array(data, dtype=np.float64)
    mat[mat == 0] = np.nan
    n_rows, n_sensors = mat.shape
    if window > n_rows:
        raise ValidationError(f"window {window} exceeds row count {n_rows}")
    if header is not None:
        ids = header[1:] if has_index else header
    else:
        ids = [str(j) for j in range(n_sensors)]
    out = []
    for j in range(n_sensors):
        for start in range(0, n_rows - window + 1, stride):
            chunk = mat[start:start + window, j]
            if np.isnan(chunk).all():
                log.debug("dropping fully-missing window sensor=%s start=%d", ids[j], start)
                continue
            meta = SeriesMeta(source_id=ids[j], start=timestamps[start] if has_index else start, units=units)
            out.append(TimeSeriesInstance(interpolate_missing(chunk), UNLABELED, meta))
    return out


def label_congestion(instance: TimeSeriesInstance, ffs_mph: float = 65.0) -> int:
    """Congestion class from the mean window speed.

    At the default 65 mph free-flow speed: below 40 is High, 40..60 inclusive is
    Moderate, above 60 is Low. Other free-flow speeds scale both cut points.
    """
    if ffs_mph <= 0:
        raise ValidationError(f"free-flow speed must be > 0, got {ffs_mph}")
    v = np.asarray(instance.values, dtype=np.float64)
    if v.size == 0:
        raise ValidationError("empty window")
    speed = float(np.nanmean(v))
    # compare 65 * v against cut * ffs so the default thresholds are exact
    if 65.0 * speed < 40.0 * ffs_mph:
        return HIGH
    if 65.0 * speed <= 60.0 * ffs_mph:
        return MODERATE
    return LOW


def label_all(instances: Iterable[TimeSeriesInstance], ffs_mph: float = 65.0) -> list[TimeSeriesInstance]:
    out = []
    for inst in instances:
        out.append(TimeSeriesInstance(inst.values, label_congestion(inst, ffs_mph), inst.meta))
    return out


# --- normalisation and splits ---------------------------------------------------

@dataclass
class NormStats:
    mean: np.ndarray
    std: np.ndarray

    @classmethod
    def fit(cls, instances: Sequence[TimeSeriesInstance]) -> "NormStats":
        if not instances:
            raise ValidationError("cannot fit normalisation on an empty split")
        stacked = np.concatenate([i.values for i in instances], axis=0)
        mean = stacked.mean(axis=0)
        std = stacked.std(axis=0)
        std = np.where(std > 0, std, 1.0)
        return cls(mean, std)

    def apply(self, values: np.ndarray) -> np.ndarray:
        return (values - self.mean) / self.std


@dataclass
class DatasetSplit:
    train: list[TimeSeriesInstance]
    val: list[TimeSeriesInstance]
    test: list[TimeSeriesInstance]
    class_count: int
    fold_index: int
    stats: NormStats
    train_idx: list[int] = field(default_factory=list)
    val_idx: list[int] = field(default_factory=list)
    test_idx: list[int] = field(default_factory=list)
    split_mode: str = "kfold"
    missing_classes: list[int] = field(default_factory=list)

    def arrays(self, part: str) -> tuple[np.ndarray, np.ndarray]:
        """Normalised ``(X [N, l, C], y [N])`` for ``train``/``val``/``test``."""
        insts = getattr(self, part)
        X, y = to_arrays(insts)
        if len(insts):
            X = self.stats.apply(X)
        return X, y


def to_arrays(instances: Sequence[TimeSeriesInstance]) -> tuple[np.ndarray, np.ndarray]:
    if not instances:
        return np.zeros((0, 0, 0)), np.zeros(0, dtype=np.int64)
    lengths = {i.values.shape for i in instances}
    if len(lengths) != 1:
        raise ValidationError(f"instances have unequal shapes {sorted(lengths)}; resample first")
    X = np.stack([i.values for i in instances])
    y = np.array([i.label for i in instances], dtype=np.int64)
    return X, y


def _missing_classes(train, test) -> list[int]:
    seen = {i.label for i in train}
    return sorted({i.label for i in test if i.labeled} - seen)


def _carve_val(train_idx: list[int], labels: np.ndarray, fraction: float, rng) -> tuple[list[int], list[int]]:
    if fraction <= 0:
        return train_idx, []
    n_val = int(round(fraction * len(train_idx)))
    if n_val == 0:
        return train_idx, []
    order = [int(i) for i in rng.permutation(train_idx)]
    return sorted(order[n_val:]), sorted(order[:n_val])


def archive_split(train: Sequence[TimeSeriesInstance], test: Sequence[TimeSeriesInstance], class_count: int,
                  val_fraction: float = 0.0, seed: int = 0) -> DatasetSplit:
    """Use an archive's fixed TRAIN/TEST partition; indices refer to ``train + test``."""
    rng = np.random.default_rng(seed)
    labels = np.array([i.label for i in train])
    tr_idx, va_idx = _carve_val(list(range(len(train))), labels, val_fraction, rng)
    tr = [train[i] for i in tr_idx]
    va = [train[i] for i in va_idx]
    missing = _missing_classes(tr, test)
    if missing:
        log.warning("test classes %s never appear in train", missing)
    offset = len(train)
    return DatasetSplit(tr, va, list(test), class_count, 0, NormStats.fit(tr), tr_idx, va_idx,
                        [offset + i for i in range(len(test))], "archive", missing)


def make_folds(data: Sequence[TimeSeriesInstance], k: int = 5, seed: int = 0, class_count: int | None = None,
               val_fraction: float = 0.0) -> list[DatasetSplit]:
    """Stratified ``k``-fold splits, deterministic in ``seed``.

    Falls back to a plain shuffle (with a warning) when some class has fewer
    than ``k`` members.
    """
    n = len(data)
    if k < 2:
        raise ValidationError(f"k must be >= 2, got {k}")
    if k > n:
        raise ValidationError(f"k = {k} exceeds instance count {n}")
    rng = np.random.default_rng(seed)
    labels = np.array([i.label for i in data])
    if class_count is None:
        class_count = int(labels.max()) + 1 if (labels >= 0).any() else 0
    classes, counts = np.unique(labels, return_counts=True)
    if (counts < k).any():
        log.warning("some class has fewer than %d members; folds are not stratified", k)
        order = [int(i) for i in rng.permutation(n)]
    else:
        order = []
        for c in classes:
            order.extend(rng.permutation(np.flatnonzero(labels == c)).tolist())
    fold_of = np.empty(n, dtype=np.int64)
    for pos, idx in enumerate(order):
        fold_of[idx] = pos % k
    splits = []
    for f in range(k):
        te_idx = np.flatnonzero(fold_of == f).tolist()
        tr_all = np.flatnonzero(fold_of != f).tolist()
        tr_idx, va_idx = _carve_val(tr_all, labels, val_fraction, rng)
        tr = [data[i] for i in tr_idx]
        te = [data[i] for i in te_idx]
        splits.append(DatasetSplit(tr, [data[i] for i in va_idx], te, class_count, f, NormStats.fit(tr),
                                   tr_idx, va_idx, te_idx, "kfold", _missing_classes(tr, te)))
    return splits


def save_split_record(splits: Sequence[DatasetSplit], path) -> None:
    """Write fold index lists and train statistics as a versioned JSON record."""
    record = {
        "format": SPLIT_FORMAT,
        "folds": [
            {
                "fold_index": s.fold_index,
                "split_mode": s.split_mode,
                "class_count": s.class_count,
                "train": s.train_idx,
                "val": s.val_idx,
                "test": s.test_idx,
                "mean": s.stats.mean.tolist(),
                "std": s.stats.std.tolist(),
            }
            for s in splits
        ],
    }
    Path(path).write_text(json.dumps(record, indent=1, sort_keys=True) + "\n", encoding="utf-8")


def load_split_record(path, data: Sequence[TimeSeriesInstance]) -> list[DatasetSplit]:
    """Rebuild splits from a record written by :func:`save_split_record` over the same ``data``."""
    record = json.loads(Path(path).read_text(encoding="utf-8"))
    if record.get("format") != SPLIT_FORMAT:
        raise ParseError(f"unsupported split record format {record.get('format')!r}", path)
    out = []
    for f in record["folds"]:
        stats = NormStats(np.array(f["mean"]), np.array(f["std"]))
        out.append(DatasetSplit([data[i] for i in f["train"]], [data[i] for i in f["val"]],
                                [data[i] for i in f["test"]], f["class_count"], f["fold_index"], stats,
                                f["train"], f["val"], f["test"], f["split_mode"]))
    return out
