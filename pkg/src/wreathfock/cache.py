"""On-disk cache of character tables as versioned JSON.

Writes go to a temporary file in the same directory and are renamed into place,
so a reader never sees a half-written entry.
"""

from __future__ import annotations

import json
import logging
import os
import tempfile
from pathlib import Path
from typing import Callable

from .characters import CharacterTable, wreath_char_table

CACHE_VERSION = 1
ENV_VAR = "WREATHFOCK_CACHE"

log = logging.getLogger(__name__)


def resolve_dir(cache_dir: str | os.PathLike | None) -> Path | None:
    """The environment variable wins over the command-line directory."""
    env = os.environ.get(ENV_VAR)
    if env:
        return Path(env)
    return Path(cache_dir) if cache_dir else None


def _dump(payload) -> str:
    return json.dumps({"version": CACHE_VERSION, "payload": payload}, sort_keys=True, separators=(",", ":"))


def cache_put(directory: Path, key: str, payload) -> Path:
    directory.mkdir(parents=True, exist_ok=True)
    target = directory / f"{key}.json"
    fd, tmp = tempfile.mkstemp(prefix=f".{key}.", suffix=".tmp", dir=directory)
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(_dump(payload))
        os.replace(tmp, target)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
    return target


def cache_get(directory: Path, key: str):
    """Return the stored payload, or None when missing, stale or unreadable."""
    target = directory / f"{key}.json"
    if not target.exists():
        return None
    try:
        data = json.loads(target.read_text(encoding="utf-8"))
    except (OSError, ValueError) as exc:
        log.warning("corrupt cache entry %s (%s); recomputing", target, exc)
        return None
    if not isinstance(data, dict) or data.get("version") != CACHE_VERSION or "payload" not in data:
        log.info("stale cache entry %s; recomputing", target)
        return None
    return data["payload"]


def cached(directory: Path | None, key: str, compute: Callable[[], object],
           encode: Callable, decode: Callable):
    if directory is None:
        return compute()
    payload = cache_get(directory, key)
    if payload is not None:
        try:
            return decode(payload)
        except (KeyError, TypeError, ValueError) as exc:
            log.warning("undecodable cache entry %s (%s); recomputing", key, exc)
    value = compute()
    cache_put(directory, key, encode(value))
    return value


def character_table(r: int, n: int, directory: Path | None = None) -> CharacterTable:
    return cached(
        directory,
        f"chartab_r{r}_n{n}",
        lambda: wreath_char_table(r, n),
        CharacterTable.to_json,
        CharacterTable.from_json,
    )
