"""Repeated train/evaluate runs, ablations and feature export."""
from __future__ import annotations

import json
import logging
import traceback
from dataclasses import asdict, dataclass
from pathlib import Path

import numpy as np
import torch

from .checkpoint import load_checkpoint, save_checkpoint
from .config import RunConfig, dump_config
from .data import (
    DatasetSplit,
    NormStats,
    TimeSeriesInstance,
    archive_split,
    label_all,
    load_archive,
    load_speed_matrix,
    make_folds,
    save_split_record,
)
from .errors import ValidationError
from .metrics import MetricsReport, aggregate, confusion_matrix
from .model import MTPModel, ModelSpec
from .text import (
    ReplayGenerator,
    TextTemplate,
    TranscriptLog,
    build_vocab,
    encode_tokens,
    generate_description,
    read_sidecar,
)
from .train import EncodedSet, TrainConfig, predict, train_epochs

log = logging.getLogger(__name__)

VARIANTS = {"vision": "drop_vision", "text": "drop_text", "timeseries": "drop_timeseries"}


@dataclass
class Dataset:
    """All instances of a run; archive data keeps TRAIN first, then TEST."""

    instances: list[TimeSeriesInstance]
    n_train: int
    class_count: int
    label_map: dict[str, int]


def _format_of(cfg: RunConfig) -> str:
    if cfg.data_format != "auto":
        return cfg.data_format
    suffix = Path(cfg.train_path).suffix.lower()
    return {".ts": "ts", ".tsv": "tsv"}.get(suffix, "matrix")


def load_dataset(cfg: RunConfig) -> Dataset:
    fmt = _format_of(cfg)
    if fmt == "matrix":
        if cfg.test_path:
            raise ValidationError("speed matrices are split by folds; leave test_path empty")
        insts = label_all(load_speed_matrix(cfg.train_path, cfg.window, cfg.stride), cfg.ffs_mph)
        return Dataset(insts, len(insts), 3, {"Low": 0, "Moderate": 1, "High": 2})
    train = load_archive(cfg.train_path)
    insts, n_train, label_map = list(train.instances), len(train.instances), train.label_map
    if cfg.test_path:
        test = load_archive(cfg.test_path, train.label_map)
        insts += test.instances
    return Dataset(insts, n_train, len(label_map), label_map)


def template_of(cfg: RunConfig) -> TextTemplate:
    return TextTemplate(cfg.text_topic, cfg.text_background, cfg.text_position, cfg.text_item)


def make_texts(cfg: RunConfig, data: Dataset, transcript: TranscriptLog | None = None) -> list[str]:
    """Description per instance: from the sidecar if configured, else generated."""
    if cfg.text_sidecar:
        side = read_sidecar(cfg.text_sidecar)
        missing = [i for i in range(len(data.instances)) if i not in side]
        if missing:
            raise ValidationError(f"sidecar {cfg.text_sidecar} lacks instances {missing[:5]}...")
        return [side[i] for i in range(len(data.instances))]
    client = ReplayGenerator(TranscriptLog(cfg.text_replay)) if cfg.text_replay else None
    template = template_of(cfg)
    return [generate_description(x, template, client, cfg.max_tokens, transcript=transcript)
            for x in data.instances]


def model_spec(cfg: RunConfig, data: Dataset) -> ModelSpec:
    first = data.instances[0].values
    return ModelSpec(
        length=first.shape[0], channels=first.shape[1], class_count=data.class_count,
        embed_dim=cfg.embed_dim, fusion_dim=cfg.fusion_dim, depth=cfg.depth, taps=cfg.taps,
        filters=cfg.filters, pool=cfg.pool, phi=cfg.phi, image_size=cfg.image_size,
        max_tokens=cfg.max_tokens, ts_pool=cfg.ts_pool, classifier_hidden=cfg.classifier_hidden,
        feature_norm=cfg.feature_norm, drop_timeseries=cfg.drop_timeseries,
        drop_vision=cfg.drop_vision, drop_text=cfg.drop_text,
    )


def train_config(cfg: RunConfig, seed: int) -> TrainConfig:
    return TrainConfig(lr=cfg.lr, weight_decay=cfg.weight_decay, epochs=cfg.epochs,
                       batch_size=cfg.batch_size, warmup_fraction=cfg.warmup_fraction, alpha=cfg.alpha,
                       beta=cfg.beta, gamma=cfg.gamma, tau=cfg.tau, seed=seed)


def build_splits(cfg: RunConfig, data: Dataset, seed: int) -> list[DatasetSplit]:
    if cfg.split_mode == "archive":
        if data.n_train == len(data.instances):
            raise ValidationError("archive split needs a test file")
        train, test = data.instances[:data.n_train], data.instances[data.n_train:]
        return [archive_split(train, test, data.class_count, cfg.val_fraction, seed)]
    return make_folds(data.instances, cfg.folds, seed, data.class_count, cfg.val_fraction)


def encode_part(instances, idx, texts, vocab, stats: NormStats, max_tokens: int) -> EncodedSet:
    if not idx:
        return EncodedSet(torch.zeros(0, 1, 1), torch.zeros(0, max_tokens, dtype=torch.long),
                          torch.zeros(0, max_tokens), torch.zeros(0, dtype=torch.long))
    X = np.stack([stats.apply(instances[i].values) for i in idx])
    y = np.array([instances[i].label for i in idx], dtype=np.int64)
    ids, mask = encode_tokens([texts[i] for i in idx], vocab, max_tokens)
    return EncodedSet(torch.tensor(X, dtype=torch.float32), ids, mask, torch.tensor(y))


def _write_json(path: Path, obj) -> None:
    path.write_text(json.dumps(obj, indent=1, sort_keys=True) + "\n", encoding="utf-8")


def checkpoint_header(cfg: RunConfig, spec: ModelSpec, vocab, data: Dataset, split: DatasetSplit,
                      seed: int, repeat: int) -> dict:
    return {
        "config": cfg.training_dict(),
        "spec": asdict(spec),
        "seed": seed,
        "repeat": repeat,
        "fold": split.fold_index,
        "split_mode": split.split_mode,
        "class_count": data.class_count,
        "label_map": data.label_map,
        "vocab": vocab,
        "norm_mean": split.stats.mean.tolist(),
        "norm_std": split.stats.std.tolist(),
        "train_idx": split.train_idx,
        "test_idx": split.test_idx,
    }


def model_from_checkpoint(path) -> tuple[MTPModel, dict]:
    header, state = load_checkpoint(path)
    model = MTPModel(ModelSpec(**header["spec"]), header["vocab"], header["seed"])
    model.load_state_dict(state)
    model.eval()
    return model, header


def evaluate(model: MTPModel, data: EncodedSet) -> MetricsReport:
    if len(data) == 0:
        raise ValidationError("evaluation set is empty")
    pred = predict(model, data).argmax(1).numpy()
    return MetricsReport.from_confusion(confusion_matrix(data.y.numpy(), pred, model.spec.class_count))


def train_fold(cfg: RunConfig, data: Dataset, texts, split: DatasetSplit, seed: int, repeat: int,
               fold_dir: Path) -> MetricsReport:
    vocab = build_vocab([texts[i] for i in split.train_idx], cfg.max_tokens)
    enc = lambda idx: encode_part(data.instances, idx, texts, vocab, split.stats, cfg.max_tokens)
    train, val, test = enc(split.train_idx), enc(split.val_idx), enc(split.test_idx)
    spec = model_spec(cfg, data)
    model = MTPModel(spec, vocab, seed)
    history = train_epochs(model, train, train_config(cfg, seed), val if len(val) else None, fold_dir)
    report = evaluate(model, test)
    save_checkpoint(fold_dir / "model.ckpt", model.state_dict(),
                    checkpoint_header(cfg, spec, vocab, data, split, seed, repeat))
    _write_json(fold_dir / "history.json", history)
    _write_json(fold_dir / "metrics.json", report.as_dict())
    return report


def run_experiment(cfg: RunConfig) -> dict:
    """``cfg.repeats`` runs with seeds ``seed + r``; returns (and writes) the metrics record."""
    cfg.validate()
    out = Path(cfg.out)
    out.mkdir(parents=True, exist_ok=True)
    (out / "config.cfg").write_text(dump_config(cfg), encoding="utf-8")
    data = load_dataset(cfg)
    texts = make_texts(cfg, data)
    repeats, reports = [], []
    for r in range(cfg.repeats):
        seed = cfg.seed + r
        rdir = out / f"repeat_{r}"
        rdir.mkdir(exist_ok=True)
        splits = build_splits(cfg, data, seed)
        save_split_record(splits, rdir / "splits.json")
        folds, cm = [], np.zeros((data.class_count, data.class_count), dtype=np.int64)
        try:
            for split in splits:
                fdir = rdir / f"fold_{split.fold_index}"
                fdir.mkdir(exist_ok=True)
                rep = train_fold(cfg, data, texts, split, seed, r, fdir)
                log.info("repeat %d fold %d: accuracy %.4f macro F1 %.4f", r, split.fold_index,
                         rep.accuracy, rep.macro_f1)
                folds.append(rep.as_dict())
                cm += rep.confusion
        except Exception:
            # keep whatever the finished folds wrote; this repeat is abandoned
            (rdir / "error.txt").write_text(traceback.format_exc(), encoding="utf-8")
            log.exception("repeat %d failed", r)
            repeats.append({"repeat": r, "seed": seed, "failed": True, "folds": folds})
            continue
        pooled = MetricsReport.from_confusion(cm)
        reports.append(pooled)
        repeats.append({"repeat": r, "seed": seed, "failed": False, "folds": folds, **pooled.as_dict()})
    if not reports:
        raise RuntimeError(f"every repeat failed; see {out}/repeat_*/error.txt")
    record = {
        "split_mode": cfg.split_mode,
        "variant": variant_name(cfg),
        "aggregate": aggregate(reports),
        "repeats": repeats,
    }
    _write_json(out / "metrics.json", record)
    return record


def variant_name(cfg: RunConfig) -> str:
    dropped = [v for v, flag in VARIANTS.items() if getattr(cfg, flag)]
    return "full" if not dropped else "+".join(f"w/o {v}" for v in dropped)


def run_ablation(cfg: RunConfig, variant: str) -> dict:
    """Same protocol with exactly one branch masked."""
    if variant not in VARIANTS:
        raise ValidationError(f"variant must be one of {sorted(VARIANTS)}, got {variant!r}")
    others = [v for v, flag in VARIANTS.items() if v != variant and getattr(cfg, flag)]
    if others:
        raise ValidationError(f"ablation of {variant} conflicts with drop flags already set for {others}")
    return run_experiment(cfg.replace(**{VARIANTS[variant]: True}))


# --- feature export ----------------------------------------------------------------

def pca_2d(F: np.ndarray) -> np.ndarray:
    """First two principal-component scores; each axis signed so its largest loading is positive."""
    F = np.asarray(F, dtype=np.float64)
    out = np.zeros((F.shape[0], 2))
    if F.shape[0] < 2:
        return out
    centred = F - F.mean(axis=0)
    _, _, vt = np.linalg.svd(centred, full_matrices=False)
    for j in range(min(2, vt.shape[0])):
        axis = vt[j]
        if axis[np.argmax(np.abs(axis))] < 0:
            axis = -axis
        out[:, j] = centred @ axis
    return out


FEATURE_SETS = ("fused", "image", "text", "timeseries")


@torch.no_grad()
def collect_features(model: MTPModel, data: EncodedSet, batch_size: int = 256) -> dict[str, np.ndarray]:
    model.eval()
    d = model.spec.fusion_dim
    parts = {k: [] for k in FEATURE_SETS}
    for start in range(0, len(data), batch_size):
        sl = slice(start, start + batch_size)
        o = model(data.X[sl], data.ids[sl], data.mask[sl])
        n = o.fused.shape[0]
        for key, t in zip(FEATURE_SETS, (o.fused, o.x_g, o.x_t, o.x_v)):
            # a dropped branch exports zeros
            parts[key].append(np.zeros((n, d)) if t is None else t.double().numpy())
    return {k: np.concatenate(v) if v else np.zeros((0, d)) for k, v in parts.items()}


def export_features(model: MTPModel, data: EncodedSet, path) -> int:
    """CSV with ``label``, four ``d``-wide feature sets and two PCA columns per set."""
    feats = collect_features(model, data)
    d = model.spec.fusion_dim
    header = ["label"] + [f"{k}_{i}" for k in FEATURE_SETS for i in range(d)]
    header += [f"{k}_pc{j}" for k in FEATURE_SETS for j in (1, 2)]
    pcs = [pca_2d(feats[k]) for k in FEATURE_SETS]
    labels = data.y.numpy()
    path = Path(path)
    try:
        with path.open("w", encoding="utf-8", newline="\n") as fh:
            fh.write(",".join(header) + "\n")
            for i in range(len(labels)):
                row = [str(int(labels[i]))]
                row += [f"{v:.8e}" for k in FEATURE_SETS for v in feats[k][i]]
                row += [f"{v:.8e}" for p in pcs for v in p[i]]
                fh.write(",".join(row) + "\n")
    except OSError as exc:
        raise OSError(f"cannot write features to {path}: {exc}") from exc
    return len(labels)


def encoded_from_header(cfg: RunConfig, header: dict, part: str = "test") -> EncodedSet:
    """Rebuild the encoded split part a checkpoint was trained/evaluated on."""
    data = load_dataset(cfg)
    texts = make_texts(cfg, data)
    stats = NormStats(np.array(header["norm_mean"]), np.array(header["norm_std"]))
    if part == "all":
        idx = list(range(len(data.instances)))
    elif part in ("train", "test"):
        idx = header[f"{part}_idx"]
    else:
        raise ValidationError(f"part must be train, test or all, got {part!r}")
    return encode_part(data.instances, idx, texts, header["vocab"], stats, header["spec"]["max_tokens"])
