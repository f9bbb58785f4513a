"""Contrastive objectives, divergence-weighted fusion and the composite loss."""
from __future__ import annotations

import logging
from typing import Sequence

import torch
import torch.nn.functional as F

from .spectral import js_delta, js_divergence

log = logging.getLogger(__name__)

LOG_FLOOR = 1e-12


def _cosine_matrix(a: torch.Tensor, b: torch.Tensor) -> torch.Tensor:
    return F.normalize(a, dim=-1, eps=1e-12) @ F.normalize(b, dim=-1, eps=1e-12).T


def supervised_contrastive_loss(features: Sequence[torch.Tensor], labels: torch.Tensor,
                                tau: float = 0.07) -> torch.Tensor:
    """Class-label contrastive loss summed over modalities.

    For anchor ``a`` and same-class positive ``p != a`` the pair term is
    ``-log(exp(s_ap / tau) / sum_{j != a} exp(s_aj / tau))`` with cosine ``s``.
    Pair terms are weighted by ``1 / |class|`` and averaged over the batch.
    """
    features = [f for f in features if f is not None]
    if not features:
        return torch.zeros(())
    n = features[0].shape[0]
    if n < 2:
        log.warning("supervised contrastive loss needs a batch of at least 2; returning 0")
        return features[0].sum() * 0.0
    labels = labels.reshape(-1)
    same = labels.unsqueeze(0) == labels.unsqueeze(1)
    eye = torch.eye(n, dtype=torch.bool)
    pos = same & ~eye
    class_size = same.sum(dim=1).to(features[0].dtype)
    total = features[0].sum() * 0.0
    for f in features:
        logits = _cosine_matrix(f, f) / tau
        logits = logits.masked_fill(eye, float("-inf"))
        log_prob = logits - torch.logsumexp(logits, dim=1, keepdim=True)
        pair = torch.where(pos, -log_prob, torch.zeros_like(log_prob))
        total = total + (pair.sum(dim=1) / class_size).sum()
    return total / n


def infonce_loss(features: Sequence[torch.Tensor], tau: float = 0.07) -> torch.Tensor:
    """Cross-modal InfoNCE over the modalities present.

    Anchor ``x_i^a`` is scored against modality ``b``'s features of the whole
    batch; its own instance is the positive. Per anchor, the terms for the other
    modalities are averaged; the result is averaged over anchors and modalities.
    """
    feats = [f for f in features if f is not None]
    M = len(feats)
    if M < 2:
        return feats[0].sum() * 0.0 if feats else torch.zeros(())
    n = feats[0].shape[0]
    target = torch.arange(n)
    total = feats[0].sum() * 0.0
    for a in range(M):
        per_anchor = 0.0
        for b in range(M):
            if b == a:
                continue
            logits = _cosine_matrix(feats[a], feats[b]) / tau
            per_anchor = per_anchor + F.cross_entropy(logits, target, reduction="sum")
        total = total + per_anchor / (M - 1)
    return total / (M * n)


def modality_posteriors(features: Sequence[torch.Tensor | None], heads) -> list[torch.Tensor | None]:
    """Softmax class posteriors from each modality's linear head."""
    return [None if f is None else torch.softmax(h(f), dim=-1) for f, h in zip(features, heads)]


def divergence_weight(posteriors: Sequence[torch.Tensor | None]) -> torch.Tensor:
    """Per-instance mean pairwise JS divergence among the posteriors present."""
    ps = [p for p in posteriors if p is not None]
    if len(ps) == 3:
        return js_delta(*ps, validate=False)
    if len(ps) == 2:
        return js_divergence(ps[0], ps[1])
    return torch.zeros(ps[0].shape[0], dtype=ps[0].dtype)


def fuse_features(features: Sequence[torch.Tensor | None], posteriors: Sequence[torch.Tensor | None],
                  gates: Sequence[torch.Tensor]) -> tuple[torch.Tensor, torch.Tensor]:
    """``(1 - delta) * sum K x + delta * sum x`` per instance; returns ``(fused, delta)``.

    ``gates`` are ``[d, d]`` matrices applied as ``K @ x``. With modalities
    missing, both sums are rescaled by ``3 / n_present``.
    """
    present = [(f, K) for f, K in zip(features, gates) if f is not None]
    delta = divergence_weight(posteriors)
    gated = sum(f @ K.T for f, K in present)
    raw = sum(f for f, _ in present)
    scale = 3.0 / len(present)
    w = delta.unsqueeze(-1)
    return scale * ((1.0 - w) * gated + w * raw), delta


def cross_entropy_loss(probs: torch.Tensor, labels: torch.Tensor) -> torch.Tensor:
    """Mean negative log-probability of the true class, log floored at 1e-12."""
    picked = probs.gather(1, labels.reshape(-1, 1)).squeeze(1)
    return -torch.log(picked.clamp_min(LOG_FLOOR)).mean()


def total_loss(sup, uns, ce, alpha: float = 0.1, beta: float = 0.1, gamma: float = 1.0):
    return alpha * sup + beta * uns + gamma * ce
