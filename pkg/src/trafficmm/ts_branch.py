"""Numeric branch: scalar embedding, complex frequency-domain MLP, back to time."""
from __future__ import annotations

import math

import torch
from torch import nn

from .errors import ValidationError
from .spectral import ComplexSpectrum, fft_forward, ifft_inverse


def embed_series(X: torch.Tensor, psi: torch.Tensor) -> torch.Tensor:
    """``D[b, i, k] = X[b, i] * psi[k]`` (any leading shape on ``X``)."""
    psi = psi.reshape(-1)
    return X.unsqueeze(-1) * psi


def freq_mlp_preactivation(Z: ComplexSpectrum, W_real, W_imag, B_real, B_imag) -> tuple[torch.Tensor, torch.Tensor]:
    """Complex affine map ``Z @ W + B`` split into (real, imag) planes."""
    m = Z.real.shape[-1]
    if W_real.shape != W_imag.shape or W_real.shape[0] != m:
        raise ValidationError(f"weights {tuple(W_real.shape)} do not accept inputs of width {m}")
    if B_real.shape[-1] != W_real.shape[1] or B_imag.shape != B_real.shape:
        raise ValidationError("bias width does not match weight output width")
    O, I = Z.real, Z.imag
    re = O @ W_real - I @ W_imag + B_real
    im = O @ W_imag + I @ W_real + B_imag
    return re, im


def freq_mlp_layer(Z: ComplexSpectrum, W_real, W_imag, B_real, B_imag) -> ComplexSpectrum:
    """One frequency-domain layer; ReLU applied to the real and imaginary planes separately."""
    re, im = freq_mlp_preactivation(Z, W_real, W_imag, B_real, B_imag)
    return ComplexSpectrum(torch.relu(re), torch.relu(im), Z.origin_length)


class ComplexLinear(nn.Module):
    def __init__(self, m: int):
        super().__init__()
        bound = 1.0 / math.sqrt(m)
        self.W_real = nn.Parameter(_uniform((m, m), bound))
        self.W_imag = nn.Parameter(_uniform((m, m), bound))
        self.B_real = nn.Parameter(torch.zeros(m))
        self.B_imag = nn.Parameter(torch.zeros(m))

    def forward(self, Z: ComplexSpectrum) -> ComplexSpectrum:
        return freq_mlp_layer(Z, self.W_real, self.W_imag, self.B_real, self.B_imag)


def _uniform(shape, bound) -> torch.Tensor:
    return (torch.rand(shape) * 2.0 - 1.0) * bound


class TimeSeriesEncoder(nn.Module):
    """Series ``[B, l]`` or ``[B, l, C]`` to a feature ``[B, d]``.

    Channels share all weights and are encoded independently. ``pool="flatten"``
    projects the whole ``l x m`` time-domain map; ``pool="mean"`` averages over
    time first, which keeps only the DC bin of the processed spectrum.
    """

    def __init__(self, length: int, channels: int = 1, m: int = 32, d: int = 128, depth: int = 2,
                 pool: str = "flatten"):
        super().__init__()
        if depth < 1:
            raise ValidationError(f"depth must be >= 1, got {depth}")
        if pool not in ("flatten", "mean"):
            raise ValidationError(f"unknown pool mode {pool!r}")
        self.length, self.channels, self.m, self.pool = length, channels, m, pool
        self.psi = nn.Parameter(_uniform((1, m), 1.0 / math.sqrt(m)))
        self.layers = nn.ModuleList(ComplexLinear(m) for _ in range(depth))
        width = channels * m * (length if pool == "flatten" else 1)
        self.out_proj = nn.Linear(width, d)

    def spatial(self, X: torch.Tensor) -> torch.Tensor:
        """Time-domain map after the frequency stack, ``[B, C, l, m]``."""
        if X.dim() == 2:
            X = X.unsqueeze(-1)
        B, l, C = X.shape
        series = X.permute(0, 2, 1).reshape(B * C, l)
        D = embed_series(series, self.psi)  # [B*C, l, m]
        Z = fft_forward(D)
        for layer in self.layers:
            Z = layer(Z)
        out = ifft_inverse(Z, check_symmetry=False)
        return out.reshape(B, C, l, self.m)

    def forward(self, X: torch.Tensor) -> torch.Tensor:
        H = self.spatial(X)
        if self.pool == "mean":
            H = H.mean(dim=2)
        return self.out_proj(H.reshape(H.shape[0], -1))


def encode_timeseries(X: torch.Tensor, encoder: TimeSeriesEncoder) -> torch.Tensor:
    return encoder(X)
