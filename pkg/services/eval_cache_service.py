"""
Eval Cache Service - persistent (word, c, digits) -> value store
"""

import json
import logging
import os
import tempfile
import threading
from fractions import Fraction
from pathlib import Path
from typing import Dict, Optional

from mpmath import mp, mpf

from models.errors import CacheFormatError
from models.letter_word import LetterWord

logger = logging.getLogger(__name__)

CACHE_FORMAT = "zc-eval-cache/1"
CACHE_ENV = "ZC_EVAL_CACHE"


class EvalCacheService:
    """
    Service for the on-disk evaluation cache.

    One JSON file {"format": "zc-eval-cache/1", "entries": {key: decimal}}.
    A file written with another format tag is ignored and overwritten on save.
    """

    def __init__(self, path: Optional[str] = None, use_env: bool = True):
        """
        Args:
            path: Cache file (default: $ZC_EVAL_CACHE)
            use_env: Fall back to $ZC_EVAL_CACHE when path is None; without
                either the cache lives in memory only
        """
        if path is None and use_env:
            path = os.environ.get(CACHE_ENV)
        self.path: Optional[Path] = Path(path) if path else None
        self._entries: Dict[str, str] = {}
        self._dirty = False
        self._lock = threading.Lock()
        if self.path is not None:
            self.load()

    @staticmethod
    def key(word: LetterWord, c: Fraction, digits: int) -> str:
        return f"{word}|{Fraction(c)}|{digits}"

    def load(self) -> int:
        """
        Read entries from disk.

        Returns:
            Number of entries loaded (0 for a missing or stale file)
        """
        if self.path is None or not self.path.exists():
            return 0
        try:
            with open(self.path, "r", encoding="utf-8") as f:
                data = json.load(f)
        except json.JSONDecodeError as exc:
            raise CacheFormatError(f"Cache file {self.path} is not valid JSON: {exc}") from exc
        if not isinstance(data, dict) or data.get("format") != CACHE_FORMAT:
            logger.warning("Ignoring cache %s with format %r", self.path,
                           data.get("format") if isinstance(data, dict) else None)
            return 0
        entries = data.get("entries", {})
        if not isinstance(entries, dict):
            raise CacheFormatError(f"Cache file {self.path} has no entry table")
        with self._lock:
            self._entries.update({str(k): str(v) for k, v in entries.items()})
        logger.debug("Loaded %d cached values from %s", len(entries), self.path)
        return len(entries)

    def get(self, word: LetterWord, c: Fraction, digits: int) -> Optional[mpf]:
        """Cached value parsed at `digits` + 10 decimal digits, or None"""
        with self._lock:
            text = self._entries.get(self.key(word, c, digits))
        if text is None:
            return None
        with mp.workdps(digits + 10):
            return mpf(text)

    def put(self, word: LetterWord, c: Fraction, digits: int, value: mpf) -> None:
        with mp.workdps(digits + 10):
            text = mp.nstr(value, digits + 5, strip_zeros=False)
        with self._lock:
            self._entries[self.key(word, c, digits)] = text
            self._dirty = True

    def __len__(self) -> int:
        return len(self._entries)

    def save(self) -> None:
        """Write the file atomically if anything changed"""
        if self.path is None or not self._dirty:
            return
        with self._lock:
            payload = {"format": CACHE_FORMAT, "entries": dict(sorted(self._entries.items()))}
            self._dirty = False
        self.path.parent.mkdir(parents=True, exist_ok=True)
        fd, tmp = tempfile.mkstemp(dir=str(self.path.parent), suffix=".tmp")
        with os.fdopen(fd, "w", encoding="utf-8") as f:
            json.dump(payload, f, indent=1)
        os.replace(tmp, self.path)
        logger.debug("Saved %d cached values to %s", len(payload["entries"]), self.path)
