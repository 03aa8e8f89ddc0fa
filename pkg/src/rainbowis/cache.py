"""Append-only JSON-lines store of f-value results.

Each line is one ``FResult`` record plus a ``version`` field. Lookups take the
last conclusive record for ``(graph, n, m)`` with the current version, so
re-running with ``recompute`` simply appends a fresher line. Writers hold an
exclusive ``flock`` while appending; readers take a shared one.
"""

from __future__ import annotations

import fcntl
import json
import os
from pathlib import Path

from .fsearch import FResult

CACHE_VERSION = 1
CACHE_ENV = "RAINBOW_CACHE"


def default_cache_path() -> Path:
    env = os.environ.get(CACHE_ENV)
    if env:
        return Path(env)
    return Path.home() / ".cache" / "rainbowis" / "fvalues.jsonl"


class ResultCache:
    def __init__(self, path: str | os.PathLike[str] | None = None) -> None:
        self.path = Path(path) if path is not None else default_cache_path()

    def records(self) -> list[dict]:
        if not self.path.exists():
            return []
        out = []
        with open(self.path, encoding="utf-8") as fh:
            fcntl.flock(fh, fcntl.LOCK_SH)
            try:
                for line in fh:
                    line = line.strip()
                    if not line:
                        continue
                    try:
                        out.append(json.loads(line))
                    except json.JSONDecodeError:
                        # a torn line from a killed writer; skip it
                        continue
            finally:
                fcntl.flock(fh, fcntl.LOCK_UN)
        return out

    def lookup(self, graph: str, n: int, m: int) -> FResult | None:
        hit = None
        for rec in self.records():
            if rec.get("version") != CACHE_VERSION or rec.get("inconclusive"):
                continue
            if (rec.get("graph"), rec.get("n"), rec.get("m")) == (graph, n, m):
                hit = rec
        return None if hit is None else FResult.from_record(hit)

    def store(self, result: FResult) -> None:
        rec = {"version": CACHE_VERSION, **result.to_record()}
        line = json.dumps(rec, sort_keys=True) + "\n"
        self.path.parent.mkdir(parents=True, exist_ok=True)
        with open(self.path, "ab+") as fh:
            fcntl.flock(fh, fcntl.LOCK_EX)
            try:
                fh.seek(0, os.SEEK_END)
                if fh.tell() > 0:
                    fh.seek(-1, os.SEEK_END)
                    if fh.read(1) != b"\n":
                        # start fresh after a torn final line
                        line = "\n" + line
                fh.write(line.encode("utf-8"))
                fh.flush()
            finally:
                fcntl.flock(fh, fcntl.LOCK_UN)
