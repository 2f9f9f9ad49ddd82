"""Coefficient cache: one JSON-lines file per k.

Line 1 is a header ``{"format_version": 1, "k": k, "horizon": N}``; line n + 2
is ``[n, "<decimal digits of Delta_k(n)>"]``.
"""
from __future__ import annotations

import json
import os
import tempfile
from pathlib import Path

from .series import CoeffTable, expand_coeffs

FORMAT_VERSION = 1


class CacheError(Exception):
    pass


def cache_file(cache_dir: str | os.PathLike, k: int) -> Path:
    return Path(cache_dir) / f"delta_k{k}.jsonl"


def store_table(path: str | os.PathLike, table: CoeffTable) -> None:
    """Write atomically: temp file in the same directory, then rename."""
    path = Path(path)
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        fd, tmp = tempfile.mkstemp(prefix=path.name, suffix=".tmp", dir=path.parent)
        with os.fdopen(fd, "w") as fh:
            header = {"format_version": FORMAT_VERSION, "k": table.k, "horizon": table.horizon}
            fh.write(json.dumps(header) + "\n")
            for n, c in enumerate(table.coeffs):
                fh.write(json.dumps([n, str(c)]) + "\n")
        os.replace(tmp, path)
    except OSError as exc:
        raise CacheError(f"cannot write cache {path}: {exc}") from exc


def load_table(path: str | os.PathLike, k: int | None = None) -> CoeffTable:
    path = Path(path)
    try:
        with open(path) as fh:
            lines = fh.read().splitlines()
    except OSError as exc:
        raise CacheError(f"cannot read cache {path}: {exc}") from exc
    if not lines:
        raise CacheError(f"{path}: empty cache file")
    try:
        header = json.loads(lines[0])
        version = header["format_version"]
        if version != FORMAT_VERSION:
            raise CacheError(f"{path}: format_version {version}, expected {FORMAT_VERSION}")
        if k is not None and header["k"] != k:
            raise CacheError(f"{path}: holds k={header['k']}, expected k={k}")
        horizon = header["horizon"]
        coeffs = []
        for n, line in enumerate(lines[1:]):
            idx, digits = json.loads(line)
            if idx != n or not digits.isdigit():
                raise CacheError(f"{path}: malformed row {n + 2}")
            coeffs.append(int(digits))
    except (ValueError, KeyError, TypeError) as exc:
        raise CacheError(f"{path}: malformed cache ({exc})") from exc
    if len(coeffs) != horizon + 1:
        raise CacheError(f"{path}: header says horizon {horizon} but has {len(coeffs)} rows")
    if coeffs[0] != 1:
        raise CacheError(f"{path}: Delta(0) must be 1")
    return CoeffTable(header["k"], tuple(coeffs))


def get_table(k: int, N: int, cache_dir: str | os.PathLike | None = None) -> CoeffTable:
    """Delta_k(0..N), reusing and extending the cache when ``cache_dir`` is given."""
    if cache_dir is None:
        return expand_coeffs(k, N)
    path = cache_file(cache_dir, k)
    start = load_table(path, k) if path.exists() else None
    if start is not None and start.horizon >= N:
        return start.prefix(N)
    table = expand_coeffs(k, N, start=start)
    store_table(path, table)
    return table
