"""Small JSON disk cache for series and fitted polynomials.

Location: ``$QDVOLUMES_CACHE_DIR`` if set, else the user cache directory.
Setting ``QDVOLUMES_CACHE_DIR`` to an empty string disables it. A corrupt or
unreadable entry is treated as a miss.
"""

from __future__ import annotations

import hashlib
import json
import os
from pathlib import Path

SCHEMA = "qdv-cache-1"
ENV_VAR = "QDVOLUMES_CACHE_DIR"


def cache_dir() -> Path | None:
    env = os.environ.get(ENV_VAR)
    if env is not None:
        return Path(env) if env else None
    base = os.environ.get("XDG_CACHE_HOME") or os.path.join(os.path.expanduser("~"), ".cache")
    return Path(base) / "qdvolumes"


def _path(kind: str, key) -> Path | None:
    root = cache_dir()
    if root is None:
        return None
    digest = hashlib.sha256(json.dumps([SCHEMA, kind, key], sort_keys=True).encode()).hexdigest()
    return root / kind / f"{digest[:32]}.json"


def get(kind: str, key):
    path = _path(kind, key)
    if path is None:
        return None
    try:
        with open(path) as fh:
            payload = json.load(fh)
    except (OSError, ValueError):
        return None
    if not isinstance(payload, dict) or payload.get("schema") != SCHEMA or payload.get("key") != key:
        return None
    return payload.get("value")


def put(kind: str, key, value) -> None:
    path = _path(kind, key)
    if path is None:
        return
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        tmp = path.with_suffix(f".tmp{os.getpid()}")
        with open(tmp, "w") as fh:
            json.dump({"schema": SCHEMA, "key": key, "value": value}, fh)
        os.replace(tmp, path)
    except OSError:
        pass


def clear() -> int:
    root = cache_dir()
    if root is None or not root.exists():
        return 0
    n = 0
    for p in root.rglob("*.json"):
        try:
            p.unlink()
            n += 1
        except OSError:
            pass
    return n


def stats() -> dict:
    root = cache_dir()
    out = {"dir": str(root) if root else None, "entries": {}}
    if root is None or not root.exists():
        return out
    for sub in sorted(p for p in root.iterdir() if p.is_dir()):
        out["entries"][sub.name] = sum(1 for _ in sub.glob("*.json"))
    return out
