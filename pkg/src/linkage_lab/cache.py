"""Content-addressed disk cache for resolution records.

Entries are JSON files keyed by a content hash of the minimal
presentation (which is Groebner-canonicalized), so the same module
declared through different matrices hits the same entry.  The store is
append-only and idempotent: a second save under an existing key is a
no-op, writes go through a temporary file and an atomic rename, and a
corrupt entry is ignored with a warning and recomputed.
"""

from __future__ import annotations

import json
import os
import sys
import tempfile


class DiskStore:
    def __init__(self, root: str):
        self.root = root
        os.makedirs(root, exist_ok=True)

    def _path(self, key: str) -> str:
        return os.path.join(self.root, f"{key}.json")

    def load(self, key: str):
        path = self._path(key)
        if not os.path.exists(path):
            return None
        try:
            with open(path, "r", encoding="utf-8") as fh:
                return json.load(fh)
        except (OSError, ValueError) as e:
            print(f"warning: ignoring corrupt cache entry {path}: {e}",
                  file=sys.stderr)
            return None

    def save(self, key: str, record) -> None:
        path = self._path(key)
        if os.path.exists(path):
            return
        fd, tmp = tempfile.mkstemp(dir=self.root, suffix=".tmp")
        try:
            with os.fdopen(fd, "w", encoding="utf-8") as fh:
                json.dump(record, fh, sort_keys=True)
            os.replace(tmp, path)
        except OSError:
            if os.path.exists(tmp):
                os.unlink(tmp)
            raise


def resolve_cache_dir(explicit: str | None = None) -> str | None:
    """--cache-dir wins, then the LINKAGE_LAB_CACHE environment variable."""
    if explicit:
        return explicit
    return os.environ.get("LINKAGE_LAB_CACHE") or None


def install_cache(cache_dir: str | None):
    """Attach a DiskStore to the resolution engine; None detaches."""
    from .resolutions import set_resolution_store

    store = DiskStore(cache_dir) if cache_dir else None
    set_resolution_store(store)
    return store
