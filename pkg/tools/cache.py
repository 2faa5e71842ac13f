"""
Operator cache - in-memory memo of dense Pauli-string matrices.
Reads are lock-free; insertion is synchronized so concurrent callers
never build the same entry twice.
"""
import logging
from threading import Lock
from typing import Callable, Dict, Hashable, Optional

import numpy as np

logger = logging.getLogger(__name__)


class OperatorCache:
    """
    Memo of read-only numpy arrays keyed by (kind, indices).
    Cached arrays are marked non-writeable before they are shared.
    """

    def __init__(self, prefix: str = "pauli", max_entries: int = 50_000):
        self._prefix = prefix
        self._max_entries = max_entries
        self._memory: Dict[Hashable, np.ndarray] = {}
        self._lock = Lock()
        self.hits = 0
        self.misses = 0

    def get(self, key: Hashable) -> Optional[np.ndarray]:
        """Get cached array. Returns None on miss."""
        value = self._memory.get(key)
        if value is not None:
            self.hits += 1
        return value

    def get_or_build(self, key: Hashable, builder: Callable[[], np.ndarray]) -> np.ndarray:
        value = self.get(key)
        if value is not None:
            return value
        with self._lock:
            value = self._memory.get(key)
            if value is not None:
                return value
            self.misses += 1
            value = np.array(builder())
            value.setflags(write=False)
            if len(self._memory) >= self._max_entries:
                logger.debug("Cache %s full (%d entries), clearing", self._prefix, len(self._memory))
                self._memory.clear()
            self._memory[key] = value
            return value

    def invalidate(self, key: Optional[Hashable] = None) -> None:
        """Drop one entry, or everything when key is None."""
        with self._lock:
            if key is None:
                self._memory.clear()
            else:
                self._memory.pop(key, None)

    def __len__(self) -> int:
        return len(self._memory)


# Global instance shared across modules
pauli_cache = OperatorCache(prefix="pauli")
