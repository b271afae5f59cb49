"""Content-addressed on-disk cache for computed coefficient tables.

The cache directory comes from the SO5CG_CACHE environment variable; when it
is unset the cache is disabled and every lookup misses. Keys hash the engine
version together with the request, so stale entries can never be replayed
across engine revisions. Payloads round-trip bit-exactly through the exact
number JSON encoding, which keeps cache hits byte-identical to cold runs.
"""

from __future__ import annotations

import hashlib
import json
import os
from dataclasses import dataclass
from datetime import datetime, timezone
from pathlib import Path
from typing import Optional

from . import ENGINE_VERSION

SCHEMA = "so5cg/1"


@dataclass(frozen=True)
class CacheEntry:
    key: str
    created_at: str
    payload: dict

    def to_json_dict(self) -> dict:
        return {
            "schema": SCHEMA,
            "kind": "cache_entry",
            "key": self.key,
            "created_at": self.created_at,
            "payload": self.payload,
        }


def cache_key(kind: str, *parts: str) -> str:
    material = "\x1f".join((ENGINE_VERSION, kind) + parts)
    return hashlib.sha256(material.encode("utf-8")).hexdigest()


def cache_dir() -> Optional[Path]:
    root = os.environ.get("SO5CG_CACHE")
    if not root:
        return None
    return Path(root)


def load(key: str) -> Optional[dict]:
    root = cache_dir()
    if root is None:
        return None
    path = root / f"{key}.json"
    try:
        with path.open("r", encoding="utf-8") as fh:
            entry = json.load(fh)
    except (FileNotFoundError, json.JSONDecodeError):
        return None
    if entry.get("schema") != SCHEMA or entry.get("key") != key:
        return None
    return entry.get("payload")


def store(key: str, payload: dict) -> None:
    root = cache_dir()
    if root is None:
        return
    root.mkdir(parents=True, exist_ok=True)
    entry = CacheEntry(
        key=key,
        created_at=datetime.now(timezone.utc).isoformat(),
        payload=payload,
    )
    path = root / f"{key}.json"
    tmp = path.with_suffix(".json.tmp")
    with tmp.open("w", encoding="utf-8") as fh:
        json.dump(entry.to_json_dict(), fh, sort_keys=True)
    tmp.replace(path)
