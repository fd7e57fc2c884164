"""Persistent on-disk cache of unisingularity verdicts.

One versioned JSON document. Entries are only trusted when both the format
version and the engine fingerprint match; anything else is ignored with a
warning and recomputed.
"""

from __future__ import annotations

import json
import logging
import os
import tempfile
from pathlib import Path

from . import __version__
from .charpoly import REPORT_VERSION, UnisingularVerdict
from .partitions import Partition

log = logging.getLogger(__name__)

CACHE_VERSION = "1"
ENGINE_FINGERPRINT = f"unispecht-{__version__}/report-{REPORT_VERSION}"
ENV_VAR = "UNISPECHT_CACHE"


def default_cache_path() -> Path:
    override = os.environ.get(ENV_VAR)
    if override:
        return Path(override)
    base = os.environ.get("XDG_CACHE_HOME") or Path.home() / ".cache"
    return Path(base) / "unispecht" / "verdicts.json"


def _key(lam: Partition) -> str:
    return f"{sum(lam)}:{','.join(map(str, lam))}"


class ResultCache:
    def __init__(self, path: Path | str, engine: str = ENGINE_FINGERPRINT):
        self.path = Path(path)
        self.engine = engine
        self.entries: dict[str, dict] = {}
        self.dirty = False
        self._load()

    def _load(self) -> None:
        if not self.path.exists():
            return
        try:
            data = json.loads(self.path.read_text())
        except (OSError, ValueError) as exc:
            log.warning("ignoring unreadable cache %s: %s", self.path, exc)
            return
        if not isinstance(data, dict) or data.get("version") != CACHE_VERSION or data.get("engine") != self.engine:
            log.warning(
                "ignoring cache %s: version %r / engine %r does not match %r / %r",
                self.path,
                data.get("version") if isinstance(data, dict) else None,
                data.get("engine") if isinstance(data, dict) else None,
                CACHE_VERSION,
                self.engine,
            )
            return
        entries = data.get("entries")
        if not isinstance(entries, dict):
            log.warning("ignoring cache %s: malformed entries", self.path)
            return
        self.entries = entries

    def get(self, lam: Partition) -> UnisingularVerdict | None:
        raw = self.entries.get(_key(lam))
        if raw is None:
            return None
        try:
            v = UnisingularVerdict.from_dict(raw)
        except (KeyError, TypeError, ValueError) as exc:
            log.warning("ignoring corrupt cache entry for %s: %s", lam, exc)
            return None
        return v if v.lam == lam else None

    def put(self, v: UnisingularVerdict) -> None:
        key = _key(v.lam)
        data = v.to_dict()
        if self.entries.get(key) != data:
            self.entries[key] = data
            self.dirty = True

    def save(self) -> None:
        if not self.dirty:
            return
        self.path.parent.mkdir(parents=True, exist_ok=True)
        doc = {"version": CACHE_VERSION, "engine": self.engine, "entries": dict(sorted(self.entries.items()))}
        fd, tmp = tempfile.mkstemp(dir=self.path.parent, prefix=".verdicts-", suffix=".json")
        with os.fdopen(fd, "w") as fh:
            json.dump(doc, fh, sort_keys=True)
        os.replace(tmp, self.path)
        self.dirty = False
