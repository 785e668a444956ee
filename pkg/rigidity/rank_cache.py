"""
rank_cache.py – Process-wide memo table for randomized rank answers.

Entries are keyed by (tag, canonical graph bytes, d, trials, seed,
modulus) and never invalidated: every cached value is a pure function
of its key. Lookups are plain dict reads; the hit/miss counters and
inserts take the lock, and an insert keeps the first value stored, so
concurrent callers agree on one answer.
"""

from __future__ import annotations

import logging
import threading
from typing import Any, Callable, Hashable

logger = logging.getLogger(__name__)


class RankCache:
    """Thread-safe get-or-compute map."""

    def __init__(self) -> None:
        self._data: dict[Hashable, Any] = {}
        self._lock = threading.Lock()
        self.hits = 0
        self.misses = 0

    def get_or_compute(self, key: Hashable, compute: Callable[[], Any]) -> Any:
        try:
            value = self._data[key]
        except KeyError:
            pass
        else:
            with self._lock:
                self.hits += 1
            return value
        value = compute()
        with self._lock:
            self.misses += 1
            return self._data.setdefault(key, value)

    def clear(self) -> None:
        with self._lock:
            self._data.clear()
            self.hits = 0
            self.misses = 0

    def __len__(self) -> int:
        return len(self._data)


RANK_CACHE = RankCache()
