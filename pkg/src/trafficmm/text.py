"""Textual branch: templated descriptions, optional external generator, token encoder."""
from __future__ import annotations

import json
import logging
import re
import threading
from concurrent.futures import ThreadPoolExecutor, TimeoutError as FutureTimeout
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Protocol, Sequence

import numpy as np
import torch
from torch import nn

from .data import TimeSeriesInstance
from .errors import ValidationError
from .spectral import FilterBank, spectral_average_pool
from .vision import cross_enhance, spectral_features

log = logging.getLogger(__name__)

MAX_TOKENS = 128
UNK = "<unk>"
_TOKEN_RE = re.compile(r"[A-Za-z]+|\d+(?:\.\d+)?|[^\w\s]")


@dataclass
class TextTemplate:
    topic: str = "urban traffic profile"
    background: str = "sensor readings sampled at a fixed interval"
    position: str = "unspecified location"
    item_description: str = "a daily series of counts"


def series_stats(values: np.ndarray) -> dict[str, float]:
    v = np.asarray(values, dtype=np.float64)
    if v.size == 0:
        raise ValidationError("cannot describe an empty series")
    s = v.mean(axis=1) if v.ndim == 2 else v
    t = np.arange(s.size, dtype=np.float64)
    slope = float(np.polyfit(t, s, 1)[0]) if s.size > 1 else 0.0
    return {
        "mean": float(s.mean()),
        "min": float(s.min()),
        "max": float(s.max()),
        "slope": slope,
        "peak": int(np.argmax(s)),
        "length": int(s.size),
        "std": float(s.std()),
        "profile": _profile_words(s),
    }


def _trend_word(slope: float, spread: float, length: int) -> str:
    change = slope * max(length - 1, 1)
    if spread == 0 or abs(change) < 0.1 * spread:
        return "flat"
    return "rising" if change > 0 else "falling"


def _segment_word(index: int, length: int) -> str:
    frac = index / max(length - 1, 1)
    if frac < 1 / 3:
        return "early"
    return "middle" if frac < 2 / 3 else "late"


def _variability_word(std: float, mean: float) -> str:
    cv = std / abs(mean) if mean else float("inf")
    if cv < 0.1:
        return "steady"
    return "variable" if cv < 0.5 else "volatile"


def _fmt(x: float) -> str:
    """Two significant digits, never in exponent form (5.23 -> 5.2, 734.6 -> 730)."""
    if x == 0 or not np.isfinite(x):
        return f"{x:.1f}"
    digits = 1 - int(np.floor(np.log10(abs(x))))
    r = round(x, digits)
    return f"{r:.{max(digits, 0)}f}" if digits > 0 else f"{int(r)}"


def _profile_words(s: np.ndarray, parts: int = 8) -> list[str]:
    """Activity of each consecutive segment as a share of the series peak."""
    lo, hi = s.min(), s.max()
    words = []
    for seg in np.array_split(s, min(parts, s.size)):
        share = (seg.mean() - lo) / (hi - lo) if hi > lo else 0.0
        words.append("quiet" if share < 0.15 else "low" if share < 0.4 else "moderate" if share < 0.7 else "busy")
    return words


def tokenize(text: str) -> list[str]:
    return [t.lower() for t in _TOKEN_RE.findall(text)]


def truncate_tokens(text: str, max_tokens: int = MAX_TOKENS) -> str:
    """Cut ``text`` right after its ``max_tokens``-th token."""
    spans = list(_TOKEN_RE.finditer(text))
    if len(spans) <= max_tokens:
        return text
    return text[: spans[max_tokens - 1].end()]


def render_prompt(template: TextTemplate, stats: dict[str, float]) -> str:
    return (
        f"Describe in one sentence a traffic series about {template.topic} "
        f"({template.background}, at {template.position}) with mean {_fmt(stats['mean'])}, "
        f"range {_fmt(stats['min'])} to {_fmt(stats['max'])} and peak at step {stats['peak']}."
    )


def render_description(template: TextTemplate, stats: dict[str, float], item: str | None = None) -> str:
    spread = stats["max"] - stats["min"]
    return (
        f"topic: {template.topic}. background: {template.background}. position: {template.position}. "
        f"item: {item or template.item_description}. "
        f"the series is {_variability_word(stats['std'], stats['mean'])} and "
        f"{_trend_word(stats['slope'], spread, stats['length'])} with a {_segment_word(stats['peak'], stats['length'])} "
        f"peak at step {stats['peak']} of {stats['length']}. "
        f"activity by segment: {', '.join(stats['profile'])}. "
        f"mean {_fmt(stats['mean'])}, minimum {_fmt(stats['min'])}, maximum {_fmt(stats['max'])}, "
        f"trend {stats['slope']:+.2f} per step."
    )


class TextGenerator(Protocol):
    """External description generator: one call, prompt in, text out."""

    def generate(self, prompt: str, max_tokens: int) -> str: ...


class TranscriptLog:
    """Append-only JSON-lines record of generator calls."""

    def __init__(self, path):
        self.path = Path(path)
        self._lock = threading.Lock()

    def append(self, prompt: str, max_tokens: int, text: str | None, error: str | None = None) -> None:
        rec = {"prompt": prompt, "max_tokens": max_tokens, "text": text, "error": error}
        line = json.dumps(rec, sort_keys=True, ensure_ascii=False)
        with self._lock, self.path.open("a", encoding="utf-8") as fh:
            fh.write(line + "\n")

    def read(self) -> list[dict]:
        if not self.path.exists():
            return []
        with self.path.open("r", encoding="utf-8") as fh:
            return [json.loads(ln) for ln in fh if ln.strip()]


class ReplayGenerator:
    """Serves responses recorded in a transcript; unknown prompts raise ``KeyError``."""

    def __init__(self, transcript: TranscriptLog | Iterable[dict]):
        records = transcript.read() if isinstance(transcript, TranscriptLog) else list(transcript)
        self._answers = {r["prompt"]: r["text"] for r in records if r.get("text") is not None}

    def generate(self, prompt: str, max_tokens: int) -> str:
        return self._answers[prompt]


def call_generator(client: TextGenerator, prompt: str, max_tokens: int, timeout: float = 10.0,
                   retries: int = 1, transcript: TranscriptLog | None = None) -> str | None:
    """Call ``client`` with a timeout and retries; ``None`` on failure (never raises)."""
    last_error = None
    for attempt in range(retries + 1):
        pool = ThreadPoolExecutor(max_workers=1)
        try:
            text = pool.submit(client.generate, prompt, max_tokens).result(timeout=timeout)
            if not isinstance(text, str) or not text.strip():
                raise ValueError("empty response")
            if transcript is not None:
                transcript.append(prompt, max_tokens, text)
            return text
        except FutureTimeout:
            last_error = f"timeout after {timeout}s"
        except Exception as exc:  # any client failure falls back
            last_error = f"{type(exc).__name__}: {exc}"
        finally:
            pool.shutdown(wait=False)
        log.warning("text generator attempt %d failed: %s", attempt + 1, last_error)
    if transcript is not None:
        transcript.append(prompt, max_tokens, None, last_error)
    return None


def generate_description(instance: TimeSeriesInstance, template: TextTemplate | None = None,
                         client: TextGenerator | None = None, max_tokens: int = MAX_TOKENS,
                         timeout: float = 10.0, retries: int = 1,
                         transcript: TranscriptLog | None = None) -> str:
    """Deterministic description of one instance.

    A configured ``client`` only replaces the item-description slot; on any
    failure the template's own item description is used.
    """
    template = template or TextTemplate()
    if instance.values.size == 0:
        raise ValidationError("cannot describe an empty series")
    stats = series_stats(instance.values)
    item = None
    if client is not None:
        item = call_generator(client, render_prompt(template, stats), max_tokens, timeout, retries, transcript)
        if item is not None:
            item = " ".join(item.split())
    return truncate_tokens(render_description(template, stats, item), max_tokens)


# --- sidecar files ----------------------------------------------------------------

def _escape(s: str) -> str:
    return s.replace("\\", "\\\\").replace("\t", "\\t").replace("\n", "\\n").replace("\r", "\\r")


def _unescape(s: str) -> str:
    out, i = [], 0
    table = {"\\": "\\", "t": "\t", "n": "\n", "r": "\r"}
    while i < len(s):
        if s[i] == "\\" and i + 1 < len(s) and s[i + 1] in table:
            out.append(table[s[i + 1]])
            i += 2
        else:
            out.append(s[i])
            i += 1
    return "".join(out)


def write_sidecar(texts: dict[int, str] | Sequence[str], path) -> None:
    """One ``index<TAB>text`` record per line; tabs, newlines and backslashes escaped."""
    items = texts.items() if isinstance(texts, dict) else enumerate(texts)
    with Path(path).open("w", encoding="utf-8", newline="\n") as fh:
        for idx, text in sorted(items):
            fh.write(f"{idx}\t{_escape(text)}\n")


def read_sidecar(path) -> dict[int, str]:
    out = {}
    with Path(path).open("r", encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.rstrip("\n")
            if not line:
                continue
            idx, sep, text = line.partition("\t")
            if not sep or not idx.strip().isdigit():
                raise ValidationError(f"{path}:{lineno}: expected 'index<TAB>text'")
            out[int(idx)] = _unescape(text)
    return out


# --- encoder ----------------------------------------------------------------

def build_vocab(texts: Iterable[str], max_tokens: int = MAX_TOKENS) -> dict[str, int]:
    """Sorted token vocabulary with ``<unk>`` at id 0. Pass train texts only."""
    tokens = set()
    for t in texts:
        tokens.update(tokenize(t)[:max_tokens])
    vocab = {UNK: 0}
    for tok in sorted(tokens):
        vocab[tok] = len(vocab)
    return vocab


def encode_tokens(texts: Sequence[str], vocab: dict[str, int],
                  max_tokens: int = MAX_TOKENS) -> tuple[torch.Tensor, torch.Tensor]:
    """Padded id matrix and float mask, both ``[N, max_tokens]``."""
    ids = torch.zeros(len(texts), max_tokens, dtype=torch.long)
    mask = torch.zeros(len(texts), max_tokens)
    for row, text in enumerate(texts):
        toks = tokenize(text)[:max_tokens]
        if not toks:
            raise ValidationError(f"text {row} has no tokens")
        ids[row, : len(toks)] = torch.tensor([vocab.get(t, 0) for t in toks])
        mask[row, : len(toks)] = 1.0
    return ids, mask


class TextEncoder(nn.Module):
    """Trainable token embeddings, mean-pooled to ``d``.

    With ``positional`` each token embedding is scaled elementwise by a learned
    per-slot vector before pooling, so word order survives the mean. (An additive
    position embedding would not: it only shifts the mean by a constant.)
    """

    def __init__(self, vocab: dict[str, int], d: int = 128, max_tokens: int = MAX_TOKENS,
                 positional: bool = True):
        super().__init__()
        if not vocab:
            raise ValidationError("vocabulary must not be empty")
        self.vocab = dict(vocab)
        self.max_tokens = max_tokens
        self.embedding = nn.Embedding(len(vocab), d)
        self.position = nn.Embedding(max_tokens, d) if positional else None

    def forward(self, ids: torch.Tensor, mask: torch.Tensor) -> torch.Tensor:
        emb = self.embedding(ids)
        if self.position is not None:
            emb = emb * self.position.weight[: ids.shape[1]]
        emb = emb * mask.unsqueeze(-1).to(self.embedding.weight.dtype)
        count = mask.sum(dim=1, keepdim=True).clamp_min(1.0).to(emb.dtype)
        return emb.sum(dim=1) / count

    def encode_texts(self, texts: Sequence[str]) -> torch.Tensor:
        ids, mask = encode_tokens(texts, self.vocab, self.max_tokens)
        return self(ids, mask)


def encode_text_spectrum(text: str, encoder: TextEncoder, bank: FilterBank,
                         k: int = 3) -> tuple[torch.Tensor, torch.Tensor]:
    if not tokenize(truncate_tokens(text, encoder.max_tokens)):
        raise ValidationError("text is empty after truncation")
    spe, pooled = spectral_features(encoder.encode_texts([text]), bank, k)
    return spe[0], pooled[0]


def cross_enhance_text(spe_t: torch.Tensor, spe_g: torch.Tensor, k: int = 3) -> torch.Tensor:
    """Inverse DFT of ``spe_t * pool(spe_g)``."""
    if spe_t.shape != spe_g.shape:
        raise ValidationError(f"spectrum shapes differ: {tuple(spe_t.shape)} vs {tuple(spe_g.shape)}")
    pooled = spectral_average_pool(spe_g.unsqueeze(0) if spe_g.dim() == 1 else spe_g, k)
    return cross_enhance(spe_t, pooled[0] if spe_g.dim() == 1 else pooled)
