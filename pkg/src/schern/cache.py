"""Append-only result cache.

One JSON object per line, keys sorted, no timestamps, so identical runs
produce byte-identical files.  Appends take an advisory lock; concurrent
writers interleave whole lines.  Records carry the package version and
are ignored on version mismatch.
"""
from __future__ import annotations

import fcntl
import json
from pathlib import Path

from .chern import ChernResult
from .partitions import Partition

VERSION = "0.1.0"

CacheKey = tuple[int, int | None, Partition]


def _key(n: int, d: int | None, lam: Partition) -> CacheKey:
    return (n, d, tuple(lam))


def _decode(line: str) -> tuple[CacheKey, dict] | None:
    try:
        rec = json.loads(line)
    except json.JSONDecodeError:
        return None
    if not isinstance(rec, dict) or rec.get("version") != VERSION:
        return None
    try:
        key = _key(int(rec["n"]), rec["d"], tuple(int(p) for p in rec["partition"]))
        int(rec["n_lambda"]), int(rec["dim"]), str(rec["method"])
    except (KeyError, TypeError, ValueError):
        return None
    return key, rec


class ResultCache:
    """In-memory view of one cache file; later lines win on duplicate keys."""

    def __init__(self, path: Path):
        self.path = path
        self._data: dict[CacheKey, dict] = {}
        if path.exists():
            for line in path.read_text().splitlines():
                if decoded := _decode(line):
                    self._data[decoded[0]] = decoded[1]

    def get(self, n: int, d: int | None, lam: Partition) -> dict | None:
        return self._data.get(_key(n, d, lam))

    def result(self, n: int, d: int | None, lam: Partition) -> ChernResult | None:
        rec = self.get(n, d, lam)
        if rec is None:
            return None
        return ChernResult(
            n_lambda=int(rec["n_lambda"]),
            method=str(rec["method"]),
            cross_checked=rec["method"] == "both",
            dim=int(rec["dim"]),
        )

    def put(self, n: int, d: int | None, lam: Partition, res: ChernResult) -> None:
        rec = {
            "n": n,
            "d": d,
            "partition": list(lam),
            "n_lambda": res.n_lambda,
            "dim": res.dim,
            "method": res.method,
            "version": VERSION,
        }
        self._data[_key(n, d, lam)] = rec
        self._append(rec)

    def _append(self, rec: dict) -> None:
        self.path.parent.mkdir(parents=True, exist_ok=True)
        line = json.dumps(rec, sort_keys=True, separators=(",", ":")) + "\n"
        with open(self.path, "a") as fh:
            fcntl.flock(fh, fcntl.LOCK_EX)
            try:
                fh.write(line)
                fh.flush()
            finally:
                fcntl.flock(fh, fcntl.LOCK_UN)


class StaleCacheError(Exception):
    """A cached value disagrees with a fresh computation."""

    def __init__(self, n: int, d: int | None, lam: Partition, cached: int, fresh: int):
        self.n, self.d, self.lam = n, d, lam
        self.cached, self.fresh = cached, fresh
        super().__init__(
            f"cache disagrees for n={n} d={d} partition={lam}: "
            f"cached {cached}, recomputed {fresh}"
        )


__all__ = ["ResultCache", "StaleCacheError", "VERSION"]
