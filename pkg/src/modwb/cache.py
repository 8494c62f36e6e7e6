"""Optional on-disk cache for expensive exact tables.

Set ``MODWB_CACHE_DIR`` to enable it.  Entries are JSON files named by the
SHA-256 of their key, so a miss (or an unreadable file) just recomputes.
"""

import hashlib
import json
import os
from pathlib import Path

ENV_VAR = "MODWB_CACHE_DIR"


def cache_dir():
    path = os.environ.get(ENV_VAR)
    return Path(path) if path else None


def _path(key):
    root = cache_dir()
    if root is None:
        return None
    digest = hashlib.sha256(json.dumps(key, sort_keys=True).encode()).hexdigest()
    return root / f"{digest}.json"


def load(key):
    path = _path(key)
    if path is None or not path.is_file():
        return None
    try:
        payload = json.loads(path.read_text())
    except (OSError, ValueError):
        return None
    return payload.get("value") if payload.get("key") == key else None


def store(key, value):
    path = _path(key)
    if path is None:
        return
    path.parent.mkdir(parents=True, exist_ok=True)
    tmp = path.with_suffix(".tmp")
    tmp.write_text(json.dumps({"key": key, "value": value}, sort_keys=True))
    os.replace(tmp, path)


def cached(key, compute, encode=lambda v: v, decode=lambda v: v):
    hit = load(key)
    if hit is not None:
        return decode(hit)
    value = compute()
    store(key, encode(value))
    return value
