"""Optimisation loop."""
from __future__ import annotations

import json
import logging
import math
from dataclasses import dataclass
from pathlib import Path

import torch

from .errors import TrainingDiverged
from .model import MTPModel

log = logging.getLogger(__name__)


@dataclass
class TrainConfig:
    lr: float = 1e-4
    weight_decay: float = 0.01
    epochs: int = 50
    batch_size: int = 64
    warmup_fraction: float = 0.1
    alpha: float = 0.1
    beta: float = 0.1
    gamma: float = 1.0
    tau: float = 0.07
    seed: int = 0


@dataclass
class EncodedSet:
    """Model-ready tensors for one split part."""

    X: torch.Tensor  # [N, l, C]
    ids: torch.Tensor  # [N, T]
    mask: torch.Tensor  # [N, T]
    y: torch.Tensor  # [N]

    def __len__(self) -> int:
        return self.X.shape[0]

    def batch(self, idx) -> tuple[torch.Tensor, torch.Tensor, torch.Tensor, torch.Tensor]:
        return self.X[idx], self.ids[idx], self.mask[idx], self.y[idx]


def warmup_factor(step: int, warmup_steps: int) -> float:
    """Linear ramp to 1 over ``warmup_steps`` optimizer steps, constant afterwards."""
    if warmup_steps <= 0:
        return 1.0
    return min(1.0, (step + 1) / warmup_steps)


@torch.no_grad()
def predict(model: MTPModel, data: EncodedSet, batch_size: int = 256) -> torch.Tensor:
    model.eval()
    out = []
    for start in range(0, len(data), batch_size):
        sl = slice(start, start + batch_size)
        out.append(model(data.X[sl], data.ids[sl], data.mask[sl]).probs)
    return torch.cat(out) if out else torch.zeros(0, model.spec.class_count)


def _dump_state(model: MTPModel, dump_dir, epoch: int, step: int, parts: dict) -> Path | None:
    if dump_dir is None:
        return None
    dump_dir = Path(dump_dir)
    dump_dir.mkdir(parents=True, exist_ok=True)
    path = dump_dir / "divergence.json"
    state = {
        "epoch": epoch,
        "step": step,
        "losses": parts,
        "parameter_norms": {n: float(p.detach().norm()) for n, p in model.named_parameters()},
        "non_finite_parameters": [n for n, p in model.named_parameters() if not torch.isfinite(p).all()],
    }
    path.write_text(json.dumps(state, indent=1, sort_keys=True), encoding="utf-8")
    return path


def train_epochs(model: MTPModel, train: EncodedSet, cfg: TrainConfig, val: EncodedSet | None = None,
                 dump_dir=None) -> list[dict]:
    """AdamW with linear warmup; returns one history record per epoch.

    Batch order comes from a generator seeded with ``cfg.seed``, so repeated
    calls on identically initialised models give identical parameters.
    """
    opt = torch.optim.AdamW(model.parameters(), lr=cfg.lr, weight_decay=cfg.weight_decay)
    steps_per_epoch = max(1, math.ceil(len(train) / cfg.batch_size))
    warmup = math.ceil(cfg.warmup_fraction * steps_per_epoch * cfg.epochs)
    sched = torch.optim.lr_scheduler.LambdaLR(opt, lambda s: warmup_factor(s, warmup))
    gen = torch.Generator().manual_seed(cfg.seed)
    history = []
    step = 0
    for epoch in range(cfg.epochs):
        model.train()
        order = torch.randperm(len(train), generator=gen)
        sums = {"sup": 0.0, "uns": 0.0, "ce": 0.0, "total": 0.0}
        correct = 0
        for start in range(0, len(train), cfg.batch_size):
            X, ids, mask, y = train.batch(order[start:start + cfg.batch_size])
            out = model(X, ids, mask)
            parts = model.losses(out, y, cfg.alpha, cfg.beta, cfg.gamma, cfg.tau)
            values = {k: float(getattr(parts, k).detach()) for k in sums}
            if not all(math.isfinite(v) for v in values.values()):
                path = _dump_state(model, dump_dir, epoch, step, values)
                raise TrainingDiverged(f"non-finite loss at epoch {epoch} step {step}: {values}", path)
            opt.zero_grad(set_to_none=True)
            parts.total.backward()
            opt.step()
            sched.step()
            step += 1
            for k, v in values.items():
                sums[k] += v * len(y)
            correct += int((out.probs.argmax(1) == y).sum())
        rec = {k: v / len(train) for k, v in sums.items()}
        rec.update(epoch=epoch, train_accuracy=correct / len(train), lr=opt.param_groups[0]["lr"])
        if val is not None and len(val):
            probs = predict(model, val)
            rec["val_accuracy"] = float((probs.argmax(1) == val.y).float().mean())
        history.append(rec)
        log.debug("epoch %d %s", epoch, rec)
    return history
