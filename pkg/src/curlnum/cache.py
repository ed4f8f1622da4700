"""Content-addressed result cache for the CLI.

Each entry is a rendered-output payload plus a sidecar JSON record carrying
the table name, the parameter tuple, a format version, and a sha256 digest.
A hit replays the payload byte-for-byte; any version or digest mismatch is
treated as a miss so stale files can never leak into output.
"""

import hashlib
import json
import os
from typing import NamedTuple, Optional, Sequence, Tuple

CACHE_VERSION = 1


class CacheEntry(NamedTuple):
    name: str
    params: Tuple[str, ...]
    version: int
    payload_path: str
    digest: str


def _digest(payload: str) -> str:
    return hashlib.sha256(payload.encode()).hexdigest()


class Cache:
    def __init__(self, root: str, version: int = CACHE_VERSION):
        self.root = root
        self.version = version
        os.makedirs(root, exist_ok=True)

    def _slug(self, name: str, params: Tuple[str, ...]) -> str:
        key = hashlib.sha256(json.dumps([name, list(params)]).encode())
        return "%s-%s" % (name, key.hexdigest()[:12])

    @staticmethod
    def _norm(params: Sequence) -> Tuple[str, ...]:
        return tuple(str(p) for p in params)

    def store(self, name: str, params: Sequence, payload: str) -> CacheEntry:
        norm = self._norm(params)
        slug = self._slug(name, norm)
        payload_path = os.path.join(self.root, slug + ".out")
        with open(payload_path, "w", newline="") as fh:
            fh.write(payload)
        entry = CacheEntry(name, norm, self.version, payload_path, _digest(payload))
        with open(os.path.join(self.root, slug + ".json"), "w") as fh:
            json.dump(entry._asdict(), fh, indent=1)
        return entry

    def fetch(self, name: str, params: Sequence) -> Optional[str]:
        slug = self._slug(name, self._norm(params))
        meta_path = os.path.join(self.root, slug + ".json")
        try:
            with open(meta_path) as fh:
                meta = json.load(fh)
            with open(meta["payload_path"], newline="") as fh:
                payload = fh.read()
        except (OSError, ValueError, KeyError):
            return None
        if meta.get("version") != self.version:
            return None
        if _digest(payload) != meta.get("digest"):
            return None
        return payload
