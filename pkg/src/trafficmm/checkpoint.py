"""Versioned binary checkpoint container.

Layout (all integers little-endian)::

    magic        8 bytes   b"TMMCKPT\\0"
    version      u32       currently 1
    header_len   u32
    header       header_len bytes of UTF-8 JSON (sorted keys)
    n_tensors    u32
    name table   n_tensors x (u16 byte length, UTF-8 name)
    shape table  n_tensors x (u8 ndim, ndim x u32 dim)
    data         every tensor as float32, C order, concatenated

Tensors are stored in sorted name order, so equal models produce equal bytes.
"""
from __future__ import annotations

import json
import struct
from pathlib import Path

import numpy as np
import torch

from .errors import ParseError

MAGIC = b"TMMCKPT\0"
VERSION = 1


def encode_checkpoint(state: dict[str, torch.Tensor], header: dict) -> bytes:
    names = sorted(state)
    head = json.dumps(header, sort_keys=True, separators=(",", ":")).encode("utf-8")
    parts = [MAGIC, struct.pack("<II", VERSION, len(head)), head, struct.pack("<I", len(names))]
    for n in names:
        raw = n.encode("utf-8")
        parts.append(struct.pack("<H", len(raw)) + raw)
    arrays = []
    for n in names:
        a = state[n].detach().cpu().numpy().astype("<f4")
        parts.append(struct.pack("<B", a.ndim) + struct.pack(f"<{a.ndim}I", *a.shape))
        arrays.append(np.ascontiguousarray(a))
    parts.extend(a.tobytes() for a in arrays)
    return b"".join(parts)


def decode_checkpoint(blob: bytes, path="<bytes>") -> tuple[dict, dict[str, torch.Tensor]]:
    view = memoryview(blob)
    pos = 0

    def take(n):
        nonlocal pos
        if pos + n > len(view):
            raise ParseError(f"truncated checkpoint at byte {pos}", path)
        chunk = view[pos:pos + n]
        pos += n
        return chunk

    if bytes(take(8)) != MAGIC:
        raise ParseError("not a checkpoint (bad magic)", path)
    version, head_len = struct.unpack("<II", take(8))
    if version != VERSION:
        raise ParseError(f"unsupported checkpoint version {version}", path)
    header = json.loads(bytes(take(head_len)).decode("utf-8"))
    (count,) = struct.unpack("<I", take(4))
    names = []
    for _ in range(count):
        (ln,) = struct.unpack("<H", take(2))
        names.append(bytes(take(ln)).decode("utf-8"))
    shapes = []
    for _ in range(count):
        (ndim,) = struct.unpack("<B", take(1))
        shapes.append(struct.unpack(f"<{ndim}I", take(4 * ndim)) if ndim else ())
    state = {}
    for n, shape in zip(names, shapes):
        size = int(np.prod(shape)) if shape else 1
        a = np.frombuffer(take(4 * size), dtype="<f4").reshape(shape)
        state[n] = torch.from_numpy(a.astype(np.float32))
    if pos != len(view):
        raise ParseError(f"{len(view) - pos} trailing bytes after tensor data", path)
    return header, state


def save_checkpoint(path, state: dict[str, torch.Tensor], header: dict) -> None:
    Path(path).write_bytes(encode_checkpoint(state, header))


def load_checkpoint(path) -> tuple[dict, dict[str, torch.Tensor]]:
    return decode_checkpoint(Path(path).read_bytes(), path)
