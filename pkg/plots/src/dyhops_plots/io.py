"""Readers for the dyhops on-disk formats.

The simulator writes self-describing binary arrays (64-byte little-endian
header: magic ``DYHARR1\\0``, u32 dtype code, u32 rank, five u64 dims, zero
padding; row-major payload) with a ``<path>.json`` metadata sidecar, and CSV
error curves with an ``n_traj,E_<signal>,...`` header. This module validates
both aggressively: a malformed file raises ``SchemaError`` with the offending
path rather than producing a silently wrong figure.
"""

from __future__ import annotations

import csv
import json
import struct
from pathlib import Path

import numpy as np

__all__ = ["SchemaError", "read_array", "read_sidecar", "read_error_curve"]

_MAGIC = b"DYHARR1\x00"
_HEADER = struct.Struct("<8sII5Q")
_HEADER_SIZE = 64
_DTYPES = {0: np.dtype("<f8"), 1: np.dtype("<c16")}


class SchemaError(RuntimeError):
    """A run-directory file does not match the documented format."""


def read_array(path) -> np.ndarray:
    path = Path(path)
    try:
        with open(path, "rb") as fh:
            raw = fh.read(_HEADER_SIZE)
            if len(raw) < _HEADER_SIZE:
                raise SchemaError(f"{path}: truncated header")
            magic, code, rank, *dims = _HEADER.unpack(raw[: _HEADER.size])
            if magic != _MAGIC:
                raise SchemaError(f"{path}: bad magic {magic!r}")
            if code not in _DTYPES:
                raise SchemaError(f"{path}: unknown dtype code {code}")
            if rank > 5:
                raise SchemaError(f"{path}: invalid rank {rank}")
            shape = tuple(dims[:rank])
            data = np.frombuffer(fh.read(), dtype=_DTYPES[code])
    except OSError as exc:
        raise SchemaError(f"{path}: {exc}") from exc
    expected = int(np.prod(shape)) if shape else 1
    if data.size != expected:
        raise SchemaError(
            f"{path}: payload has {data.size} items, header promises {expected}"
        )
    return data.reshape(shape).copy()


def read_sidecar(path) -> dict:
    sidecar = Path(f"{path}.json")
    try:
        with open(sidecar) as fh:
            meta = json.load(fh)
    except OSError as exc:
        raise SchemaError(f"{sidecar}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise SchemaError(f"{sidecar}: invalid JSON ({exc})") from exc
    if not isinstance(meta, dict) or "config" not in meta:
        raise SchemaError(f"{sidecar}: sidecar lacks the 'config' section")
    return meta


def read_error_curve(path) -> tuple[np.ndarray, dict]:
    """Return (n_traj, {signal: errors}) from an error_curve.csv file."""
    path = Path(path)
    try:
        with open(path, newline="") as fh:
            rows = list(csv.reader(fh))
    except OSError as exc:
        raise SchemaError(f"{path}: {exc}") from exc
    if not rows or rows[0][:1] != ["n_traj"] or len(rows[0]) < 2:
        raise SchemaError(f"{path}: expected header 'n_traj,E_<signal>,...'")
    if len(rows) < 2:
        raise SchemaError(f"{path}: no data rows")
    labels = []
    for name in rows[0][1:]:
        if not name.startswith("E_"):
            raise SchemaError(f"{path}: unexpected column {name!r}")
        labels.append(name[2:])
    try:
        data = np.array([[float(x) for x in row] for row in rows[1:]])
    except ValueError as exc:
        raise SchemaError(f"{path}: non-numeric data ({exc})") from exc
    if data.shape[1] != len(labels) + 1:
        raise SchemaError(f"{path}: ragged rows")
    return data[:, 0], {s: data[:, j + 1] for j, s in enumerate(labels)}
