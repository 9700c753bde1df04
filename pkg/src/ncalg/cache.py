"""On-disk cache of serialized centralizer reports.

One JSON file per entry, named by the SHA-256 of the key.  The report is
stored as the exact text that was printed, so a hit is byte-identical.
"""
from __future__ import annotations

import hashlib
import json
import os
import tempfile
import time
from pathlib import Path

from . import __version__


def default_cache_dir() -> Path:
    env = os.environ.get("NCALG_CACHE")
    if env:
        return Path(env)
    return Path(os.environ.get("XDG_CACHE_HOME", Path.home() / ".cache")) / "ncalg"


def cache_key(f_text: str, field: str, D, extra: str = "") -> str:
    payload = json.dumps([f_text, field, D, extra, __version__])
    return hashlib.sha256(payload.encode()).hexdigest()


class ReportCache:
    def __init__(self, directory):
        self.dir = Path(directory)

    def path(self, key):
        return self.dir / f"{key}.json"

    def get(self, key) -> str | None:
        try:
            entry = json.loads(self.path(key).read_text())
        except (OSError, ValueError):
            return None
        if entry.get("key") != key:
            return None
        return entry["report"]

    def put(self, key, report_text: str):
        self.dir.mkdir(parents=True, exist_ok=True)
        entry = {"key": key, "timestamp": time.time(), "report": report_text}
        fd, tmp = tempfile.mkstemp(dir=self.dir, prefix=".tmp-", suffix=".json")
        try:
            with os.fdopen(fd, "w") as fh:
                json.dump(entry, fh)
            os.replace(tmp, self.path(key))
        except BaseException:
            Path(tmp).unlink(missing_ok=True)
            raise
