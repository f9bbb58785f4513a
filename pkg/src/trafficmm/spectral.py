"""Spectral primitives shared by every branch.

All functions take and return ``torch`` tensors so they can sit inside an
autograd graph; numpy arrays are accepted and converted (float64).
Spectra keep the full set of ``n`` bins.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
import torch

from .errors import ValidationError

__all__ = [
    "ComplexSpectrum",
    "FilterBank",
    "as_tensor",
    "fft_forward",
    "ifft_inverse",
    "hamming_window",
    "build_filterbank",
    "spectrum_compress",
    "spectral_average_pool",
    "js_divergence",
    "js_delta",
]

_SYMMETRY_TOL = 1e-6


def as_tensor(x, dtype=torch.float64) -> torch.Tensor:
    if isinstance(x, torch.Tensor):
        return x
    return torch.as_tensor(np.asarray(x, dtype=np.float64), dtype=dtype)


def _check_finite(x: torch.Tensor, what: str) -> None:
    if not bool(torch.isfinite(x).all()):
        raise ValidationError(f"{what} contains non-finite values")


@dataclass
class ComplexSpectrum:
    """Real and imaginary planes indexed ``[batch, bin, channel]``."""

    real: torch.Tensor
    imag: torch.Tensor
    origin_length: int

    def __post_init__(self):
        if self.real.shape != self.imag.shape:
            raise ValidationError(
                f"real/imag shape mismatch: {tuple(self.real.shape)} vs {tuple(self.imag.shape)}"
            )
        if self.origin_length < 1:
            raise ValidationError("origin_length must be >= 1")

    @classmethod
    def from_complex(cls, z: torch.Tensor) -> "ComplexSpectrum":
        return cls(z.real, z.imag, z.shape[1])

    def to_complex(self) -> torch.Tensor:
        return torch.complex(self.real, self.imag)

    def power(self) -> torch.Tensor:
        return self.real**2 + self.imag**2

    @property
    def n_bins(self) -> int:
        return self.real.shape[1]


def fft_forward(x) -> ComplexSpectrum:
    """DFT along axis 1 of a real ``[B, n, C]`` tensor (``[B, n]`` is promoted)."""
    x = as_tensor(x)
    if x.dim() == 2:
        x = x.unsqueeze(-1)
    if x.dim() != 3 or x.shape[1] < 1:
        raise ValidationError(f"expected [B, n, C] with n >= 1, got {tuple(x.shape)}")
    _check_finite(x, "fft input")
    z = torch.fft.fft(x, dim=1)
    return ComplexSpectrum(z.real, z.imag, x.shape[1])


def _is_conjugate_symmetric(S: ComplexSpectrum) -> bool:
    n = S.n_bins
    idx = (-torch.arange(n)) % n
    dr = (S.real - S.real[:, idx]).abs().max()
    di = (S.imag + S.imag[:, idx]).abs().max()
    scale = max(1.0, float(S.real.abs().max()), float(S.imag.abs().max()))
    return float(max(dr, di)) <= _SYMMETRY_TOL * scale


def ifft_inverse(S: ComplexSpectrum, check_symmetry: bool = True) -> torch.Tensor:
    """Inverse DFT along axis 1; returns the real part.

    When the input is conjugate-symmetric the discarded imaginary residue is
    asserted to be below 1e-6.
    """
    _check_finite(S.real, "spectrum real plane")
    _check_finite(S.imag, "spectrum imag plane")
    x = torch.fft.ifft(S.to_complex(), dim=1)
    if check_symmetry and not x.requires_grad and _is_conjugate_symmetric(S):
        residue = float(x.imag.abs().max()) if x.numel() else 0.0
        if residue >= _SYMMETRY_TOL:
            raise ValidationError(f"imaginary residue {residue:.3g} on a conjugate-symmetric spectrum")
    return x.real


def real_spectrum(values: torch.Tensor) -> ComplexSpectrum:
    """Wrap a real-valued (zero-phase) spectrum ``[B, n]`` or ``[B, n, C]``."""
    if values.dim() == 2:
        values = values.unsqueeze(-1)
    return ComplexSpectrum(values, torch.zeros_like(values), values.shape[1])


def hamming_window(s: int) -> torch.Tensor:
    if s < 2:
        raise ValidationError(f"Hamming window needs s >= 2, got {s}")
    i = torch.arange(s, dtype=torch.float64)
    return 0.54 - 0.46 * torch.cos(2.0 * math.pi * i / (s - 1))


@dataclass
class FilterBank:
    taps_per_filter: int
    num_filters: int
    responses: torch.Tensor  # [F, n_bins], magnitudes on the DFT grid

    def __post_init__(self):
        if self.taps_per_filter < 1 or self.num_filters < 1:
            raise ValidationError("filter bank needs s >= 1 and F >= 1")
        if not bool(torch.isfinite(self.responses).all()) or bool((self.responses < 0).any()):
            raise ValidationError("filter responses must be finite and nonnegative")

    @property
    def n_bins(self) -> int:
        return self.responses.shape[1]


def _ideal_bandpass(s: int, lo: float, hi: float) -> torch.Tensor:
    # centred ideal impulse response of the band [lo, hi] (radians, within [0, pi])
    t = torch.arange(s, dtype=torch.float64) - (s - 1) / 2.0
    h = torch.empty(s, dtype=torch.float64)
    nz = t != 0
    h[nz] = (torch.sin(hi * t[nz]) - torch.sin(lo * t[nz])) / (math.pi * t[nz])
    h[~nz] = (hi - lo) / math.pi
    return h


def build_filterbank(s: int = 9, F: int = 8, n_bins: int = 128) -> FilterBank:
    """Hamming-windowed FIR bandpass bank over ``F`` equal sub-bands of [0, pi].

    Each row is the magnitude response of one filter sampled on the
    ``n_bins``-point DFT grid, peak-normalised to 1.
    """
    if s < 2:
        raise ValidationError(f"need s >= 2 taps, got {s}")
    if F < 1:
        raise ValidationError(f"need F >= 1 filters, got {F}")
    if n_bins < s:
        raise ValidationError(f"n_bins ({n_bins}) must be >= taps ({s})")
    window = hamming_window(s)
    edges = torch.linspace(0.0, math.pi, F + 1, dtype=torch.float64)
    rows = []
    for f in range(F):
        taps = _ideal_bandpass(s, float(edges[f]), float(edges[f + 1])) * window
        padded = torch.zeros(n_bins, dtype=torch.float64)
        padded[:s] = taps
        mag = torch.fft.fft(padded).abs()
        peak = float(mag.max())
        rows.append(mag / peak if peak > 0 else mag)
    return FilterBank(s, F, torch.stack(rows))


def spectrum_compress(S: ComplexSpectrum, bank: FilterBank, c: int | None = None) -> torch.Tensor:
    """Filterbank-weighted power spectrum ``sum_f (1/c) |S|^2 * r_f``, shape ``[B, n, C]``."""
    if bank.n_bins != S.n_bins:
        raise ValidationError(f"filter bank has {bank.n_bins} bins, spectrum has {S.n_bins}")
    c = S.n_bins if c is None else c
    if c < 1:
        raise ValidationError(f"normaliser c must be >= 1, got {c}")
    weight = bank.responses.sum(dim=0).to(S.real.dtype)
    return S.power() * weight.view(1, -1, 1) / c


def spectral_average_pool(P, k: int) -> torch.Tensor:
    """Stride-1 sliding mean of width ``k`` along axis 1, last value edge-replicated.

    Window for bin ``i`` covers ``[i, i + k - 1]``; the output shape equals the input shape.
    """
    P = as_tensor(P)
    if k < 1:
        raise ValidationError(f"pool width must be >= 1, got {k}")
    if k == 1:
        return P
    squeeze = P.dim() == 2
    if squeeze:
        P = P.unsqueeze(-1)
    tail = P[:, -1:].expand(-1, k - 1, -1)
    padded = torch.cat([P, tail], dim=1)
    out = padded.unfold(1, k, 1).mean(dim=-1)
    return out.squeeze(-1) if squeeze else out


def _kl2(p: torch.Tensor, q: torch.Tensor) -> torch.Tensor:
    # base-2 KL with 0 log 0 := 0; q > 0 wherever p > 0 for mixture arguments
    safe_p = torch.where(p > 0, p, torch.ones_like(p))
    safe_q = torch.where(p > 0, q, torch.ones_like(q))
    return (p * (torch.log2(safe_p) - torch.log2(safe_q))).sum(dim=-1)


def js_divergence(p, q) -> torch.Tensor:
    """Base-2 Jensen-Shannon divergence along the last axis, in [0, 1]."""
    p, q = as_tensor(p), as_tensor(q)
    if p.shape != q.shape:
        raise ValidationError(f"distribution shapes differ: {tuple(p.shape)} vs {tuple(q.shape)}")
    m = 0.5 * (p + q)
    return (0.5 * _kl2(p, m) + 0.5 * _kl2(q, m)).clamp(0.0, 1.0)


def _check_prob(p: torch.Tensor, name: str) -> None:
    if bool((p < 0).any()) or not bool(torch.allclose(p.sum(-1), torch.ones_like(p.sum(-1)), atol=1e-6)):
        raise ValidationError(f"{name} is not a probability vector")


def js_delta(p_v, p_g, p_t, validate: bool = True) -> torch.Tensor:
    """Mean pairwise JS divergence of three posteriors (per row when batched)."""
    p_v, p_g, p_t = as_tensor(p_v), as_tensor(p_g), as_tensor(p_t)
    if not (p_v.shape == p_g.shape == p_t.shape):
        raise ValidationError("posterior length mismatch")
    if validate:
        for p, name in ((p_v, "p_v"), (p_g, "p_g"), (p_t, "p_t")):
            _check_prob(p.detach(), name)
    return (js_divergence(p_v, p_g) + js_divergence(p_v, p_t) + js_divergence(p_g, p_t)) / 3.0
