"""Three-branch model assembly."""
from __future__ import annotations

import contextlib
from dataclasses import dataclass

import torch
from torch import nn

from .errors import ValidationError
from .fusion import (
    cross_entropy_loss,
    fuse_features,
    infonce_loss,
    modality_posteriors,
    supervised_contrastive_loss,
    total_loss,
)
from .spectral import FilterBank, build_filterbank
from .text import TextEncoder
from .ts_branch import TimeSeriesEncoder
from .vision import VisionBranch, cross_enhance, spectral_features

MODALITIES = ("timeseries", "vision", "text")


@dataclass
class ModelSpec:
    """Architecture hyperparameters (everything needed to rebuild the modules)."""

    length: int
    channels: int
    class_count: int
    embed_dim: int = 32
    fusion_dim: int = 128
    depth: int = 2
    taps: int = 9
    filters: int = 8
    pool: int = 3
    phi: float = 24.0
    image_size: int = 64
    max_tokens: int = 128
    ts_pool: str = "flatten"
    classifier_hidden: int = 128
    feature_norm: str = "layer"
    text_positional: bool = True
    drop_timeseries: bool = False
    drop_vision: bool = False
    drop_text: bool = False


@dataclass
class ModelOutput:
    x_v: torch.Tensor | None
    x_g: torch.Tensor | None
    x_t: torch.Tensor | None
    posteriors: list
    delta: torch.Tensor
    fused: torch.Tensor
    probs: torch.Tensor

    @property
    def features(self):
        return [self.x_v, self.x_g, self.x_t]


@dataclass
class LossParts:
    sup: torch.Tensor
    uns: torch.Tensor
    ce: torch.Tensor
    total: torch.Tensor


@contextlib.contextmanager
def _seeded(seed: int, component: int):
    # each component draws from its own stream so ablations share the rest of the init
    with torch.random.fork_rng(devices=[]):
        torch.manual_seed(seed * 7919 + component)
        yield


class MTPModel(nn.Module):
    """Numeric, visual and textual branches fused by posterior agreement."""

    def __init__(self, spec: ModelSpec, vocab: dict[str, int], seed: int = 0):
        super().__init__()
        dropped = [spec.drop_timeseries, spec.drop_vision, spec.drop_text]
        if sum(dropped) > 2:
            raise ValidationError("at most two branches can be dropped")
        self.spec = spec
        d, m = spec.fusion_dim, spec.class_count
        with _seeded(seed, 1):
            self.ts = TimeSeriesEncoder(spec.length, spec.channels, spec.embed_dim, d, spec.depth, spec.ts_pool)
        with _seeded(seed, 2):
            self.vision = VisionBranch(spec.channels, d, spec.phi, spec.image_size)
        with _seeded(seed, 3):
            self.text = TextEncoder(vocab, d, spec.max_tokens, spec.text_positional)
        bank = build_filterbank(spec.taps, spec.filters, d)
        self.register_buffer("filter_responses", bank.responses.to(torch.get_default_dtype()))
        self.K_v = nn.Parameter(torch.eye(d))
        self.K_g = nn.Parameter(torch.eye(d))
        self.K_t = nn.Parameter(torch.eye(d))
        norms = {"layer": lambda: nn.LayerNorm(d), "none": nn.Identity}
        if spec.feature_norm not in norms:
            raise ValidationError(f"unknown feature_norm {spec.feature_norm!r}")
        self.norm_v, self.norm_g, self.norm_t = (norms[spec.feature_norm]() for _ in range(3))
        with _seeded(seed, 4):
            self.head_v = nn.Linear(d, m)
            self.head_g = nn.Linear(d, m)
            self.head_t = nn.Linear(d, m)
        with _seeded(seed, 5):
            h = spec.classifier_hidden
            if h > 0:
                self.classifier = nn.Sequential(nn.Linear(d, h), nn.ReLU(), nn.Linear(h, m))
            else:
                self.classifier = nn.Linear(d, m)

    @property
    def bank(self) -> FilterBank:
        return FilterBank(self.spec.taps, self.spec.filters, self.filter_responses)

    @property
    def alive(self) -> tuple[bool, bool, bool]:
        s = self.spec
        return (not s.drop_timeseries, not s.drop_vision, not s.drop_text)

    def masked_parameter_prefixes(self) -> list[str]:
        names = {"timeseries": ("ts.", "K_v", "head_v.", "norm_v."),
                 "vision": ("vision.", "K_g", "head_g.", "norm_g."),
                 "text": ("text.", "K_t", "head_t.", "norm_t.")}
        return [p for mod, keep in zip(MODALITIES, self.alive) if not keep for p in names[mod]]

    def forward(self, X: torch.Tensor, ids: torch.Tensor, mask: torch.Tensor) -> ModelOutput:
        use_v, use_g, use_t = self.alive
        bank, k = self.bank, self.spec.pool
        x_v = self.ts(X) if use_v else None
        spe_g = pooled_g = spe_t = pooled_t = None
        if use_g:
            spe_g, pooled_g = self.vision(X, bank, k)
        if use_t:
            spe_t, pooled_t = spectral_features(self.text(ids, mask), bank, k)
        # a missing partner contributes the multiplicative identity
        x_g = cross_enhance(spe_g, pooled_t if use_t else torch.ones_like(spe_g)) if use_g else None
        x_t = None
        if use_t:
            partner = pooled_g if use_g else torch.ones_like(spe_t)
            x_t = cross_enhance(spe_t, partner)
        x_v = self.norm_v(x_v) if use_v else None
        x_g = self.norm_g(x_g) if use_g else None
        x_t = self.norm_t(x_t) if use_t else None
        feats = [x_v, x_g, x_t]
        posts = modality_posteriors(feats, [self.head_v, self.head_g, self.head_t])
        fused, delta = fuse_features(feats, posts, [self.K_v, self.K_g, self.K_t])
        probs = torch.softmax(self.classifier(fused), dim=-1)
        return ModelOutput(x_v, x_g, x_t, posts, delta, fused, probs)

    def losses(self, out: ModelOutput, labels: torch.Tensor, alpha: float, beta: float, gamma: float,
               tau: float) -> LossParts:
        sup = supervised_contrastive_loss(out.features, labels, tau)
        uns = infonce_loss(out.features, tau)
        ce = cross_entropy_loss(out.probs, labels)
        return LossParts(sup, uns, ce, total_loss(sup, uns, ce, alpha, beta, gamma))
