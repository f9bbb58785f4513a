"""Visual branch: series-to-image generation, image encoder, filtered spectra."""
from __future__ import annotations

import math
from pathlib import Path

import numpy as np
import torch
import torch.nn.functional as F
from torch import nn

from .errors import ValidationError
from .spectral import (
    FilterBank,
    fft_forward,
    ifft_inverse,
    real_spectrum,
    spectral_average_pool,
    spectrum_compress,
)


def periodicity_encode(T: int, phi: float, dtype=torch.float64) -> torch.Tensor:
    """Rows ``[sin(2 pi t / phi), cos(2 pi t / phi)]`` for ``t = 0..T-1``."""
    if phi <= 0:
        raise ValidationError(f"period phi must be > 0, got {phi}")
    if T < 1:
        raise ValidationError(f"T must be >= 1, got {T}")
    angle = 2.0 * math.pi * torch.arange(T, dtype=torch.float64) / phi
    return torch.stack([torch.sin(angle), torch.cos(angle)], dim=-1).to(dtype)


def build_augmented_input(x: torch.Tensor, phi: float = 24.0) -> torch.Tensor:
    """Concatenate ``[x, |FFT(x)|, periodicity]`` along channels: ``C -> 2C + 2``.

    The magnitude spectrum is taken along time (bin ``k`` sits at time index ``k``)
    with orthonormal scaling. Accepts ``[l, C]`` or batched ``[B, l, C]``.
    """
    batched = x.dim() == 3
    if not batched:
        x = x.unsqueeze(0)
    if x.dim() != 3:
        raise ValidationError(f"expected [l, C] or [B, l, C], got {tuple(x.shape)}")
    B, l, _ = x.shape
    mag = torch.fft.fft(x, dim=1).abs() / math.sqrt(l)
    period = periodicity_encode(l, phi, dtype=x.dtype).unsqueeze(0).expand(B, -1, -1)
    out = torch.cat([x, mag, period], dim=-1)
    return out if batched else out[0]


def fold_shape(length: int) -> tuple[int, int]:
    """Row-major fold of a time axis into an ``H x W`` grid (``W = ceil(sqrt(l))``)."""
    w = math.ceil(math.sqrt(length))
    return math.ceil(length / w), w


def bilinear_resize(img: torch.Tensor, size: int) -> torch.Tensor:
    """Half-pixel-centred bilinear resize of ``[B, C, H, W]`` to ``size x size``."""
    return F.interpolate(img, size=(size, size), mode="bilinear", align_corners=False)


def standardize_images(img: torch.Tensor, eps: float = 1e-12) -> torch.Tensor:
    """Per-image zero mean / unit variance; zero-variance images become all zeros."""
    flat = img.reshape(img.shape[0], -1)
    mean = flat.mean(dim=1, keepdim=True)
    centred = flat - mean
    var = (centred**2).mean(dim=1, keepdim=True)
    ok = var > eps
    std = torch.sqrt(torch.where(ok, var, torch.ones_like(var)))
    out = torch.where(ok, centred / std, torch.zeros_like(centred))
    return out.reshape(img.shape)


class ImageGenerator(nn.Module):
    """Augmented series ``[B, l, C']`` to standardized images ``[B, 1, S, S]``."""

    def __init__(self, in_channels: int, mid_channels: int = 8, kernel: int = 3, image_size: int = 64):
        super().__init__()
        if mid_channels < 2:
            raise ValidationError("mid_channels must be >= 2 so it can be halved")
        self.image_size = image_size
        self.conv1d = nn.Conv1d(in_channels, mid_channels, kernel, padding=kernel // 2)
        self.conv2d_a = nn.Conv2d(mid_channels, mid_channels // 2, 3, padding=1)
        self.conv2d_b = nn.Conv2d(mid_channels // 2, 1, 3, padding=1)

    def feature_map(self, x_aug: torch.Tensor) -> torch.Tensor:
        h = torch.relu(self.conv1d(x_aug.transpose(1, 2)))  # [B, mid, l]
        B, c, l = h.shape
        rows, cols = fold_shape(l)
        if rows * cols != l:
            h = F.pad(h, (0, rows * cols - l))
        h = h.reshape(B, c, rows, cols)
        h = torch.relu(self.conv2d_a(h))
        return self.conv2d_b(h)

    def forward(self, x_aug: torch.Tensor) -> torch.Tensor:
        return standardize_images(bilinear_resize(self.feature_map(x_aug), self.image_size))


def generate_image(x_aug: torch.Tensor, generator: ImageGenerator) -> torch.Tensor:
    """Single-instance form: ``[l, C']`` to ``[1, S, S]``."""
    if x_aug.dim() != 2:
        raise ValidationError(f"expected [l, C'], got {tuple(x_aug.shape)}")
    return generator(x_aug.unsqueeze(0))[0]


class ImageEncoder(nn.Module):
    """Two stride-2 convolutions and a linear head to ``d``."""

    def __init__(self, image_size: int = 64, d: int = 128, widths: tuple[int, int] = (8, 16)):
        super().__init__()
        self.conv1 = nn.Conv2d(1, widths[0], 3, stride=2, padding=1)
        self.conv2 = nn.Conv2d(widths[0], widths[1], 3, stride=2, padding=1)
        side = math.ceil(math.ceil(image_size / 2) / 2)
        self.head = nn.Linear(widths[1] * side * side, d)

    def forward(self, img: torch.Tensor) -> torch.Tensor:
        h = torch.relu(self.conv1(img))
        h = torch.relu(self.conv2(h))
        return self.head(h.flatten(1))


def spectral_features(vec: torch.Tensor, bank: FilterBank, k: int) -> tuple[torch.Tensor, torch.Tensor]:
    """Feature vectors ``[B, d]`` to ``(spe, pooled)``, both ``[B, d]``."""
    S = fft_forward(vec.unsqueeze(-1))
    spe = spectrum_compress(S, bank, S.n_bins)[..., 0]
    return spe, spectral_average_pool(spe, k)


def encode_image_spectrum(img: torch.Tensor, encoder: ImageEncoder, bank: FilterBank,
                          k: int = 3) -> tuple[torch.Tensor, torch.Tensor]:
    if img.dim() == 3:
        img = img.unsqueeze(0)
    return spectral_features(encoder(img), bank, k)


def cross_enhance(spe: torch.Tensor, pooled_other: torch.Tensor) -> torch.Tensor:
    """Inverse DFT of ``spe * pooled_other`` treated as a zero-phase spectrum."""
    if spe.shape != pooled_other.shape:
        raise ValidationError(f"spectrum shapes differ: {tuple(spe.shape)} vs {tuple(pooled_other.shape)}")
    squeeze = spe.dim() == 1
    prod = spe * pooled_other
    if squeeze:
        prod = prod.unsqueeze(0)
    out = ifft_inverse(real_spectrum(prod), check_symmetry=False)[..., 0]
    return out[0] if squeeze else out


def cross_enhance_image(spe_g: torch.Tensor, pooled_t: torch.Tensor) -> torch.Tensor:
    return cross_enhance(spe_g, pooled_t)


class VisionBranch(nn.Module):
    def __init__(self, channels: int, d: int = 128, phi: float = 24.0, image_size: int = 64,
                 mid_channels: int = 8, kernel: int = 3):
        super().__init__()
        if phi <= 0:
            raise ValidationError(f"period phi must be > 0, got {phi}")
        self.phi = phi
        self.generator = ImageGenerator(2 * channels + 2, mid_channels, kernel, image_size)
        self.encoder = ImageEncoder(image_size, d)

    def images(self, X: torch.Tensor) -> torch.Tensor:
        if X.dim() == 2:
            X = X.unsqueeze(-1)
        return self.generator(build_augmented_input(X, self.phi))

    def forward(self, X: torch.Tensor, bank: FilterBank, k: int) -> tuple[torch.Tensor, torch.Tensor]:
        return spectral_features(self.encoder(self.images(X)), bank, k)


def write_pgm(img, path) -> None:
    """Write one image as a binary graymap (P5), min-max scaled to 0..255."""
    a = np.asarray(img.detach().cpu() if isinstance(img, torch.Tensor) else img, dtype=np.float64)
    a = a.reshape(a.shape[-2], a.shape[-1])
    lo, hi = a.min(), a.max()
    scaled = np.zeros_like(a) if hi <= lo else (a - lo) / (hi - lo) * 255.0
    data = np.round(scaled).astype(np.uint8)
    with Path(path).open("wb") as fh:
        fh.write(f"P5\n{a.shape[1]} {a.shape[0]}\n255\n".encode("ascii"))
        fh.write(data.tobytes())
