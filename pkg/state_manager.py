"""
State Management Module
Thread-safe run statistics for the HTTP API
"""

import threading
import time
from collections import deque
from typing import Any, Dict, List, Optional

import config


class StateManager:
    """
    Counters and a bounded request history shared by the API handlers
    """

    def __init__(self, history_size: Optional[int] = None):
        self._lock = threading.RLock()
        self._start_time = time.time()

        # Statistics
        self._identifications = 0
        self._reversible_verdicts = 0
        self._synthesized = 0
        self._graphs_built = 0
        self._errors = 0

        self._history = deque(maxlen=history_size or config.HISTORY_SIZE)

    # --- Recording ---

    def _remember(self, kind: str, rules: str, **details):
        self._history.append({'time': time.time(), 'kind': kind, 'rules': rules, **details})

    def record_identification(self, rules: str, reversible: bool):
        with self._lock:
            self._identifications += 1
            if reversible:
                self._reversible_verdicts += 1
            self._remember('identify', rules, reversible=reversible)

    def record_synthesis(self, rules: str, method: str, seed: int):
        with self._lock:
            self._synthesized += 1
            self._remember('synthesize', rules, method=method, seed=seed)

    def record_graph(self, rules: str, bijective: bool):
        with self._lock:
            self._graphs_built += 1
            self._remember('stg', rules, bijective=bijective)

    def record_error(self):
        with self._lock:
            self._errors += 1

    # --- Reading ---

    def get_history(self, limit: Optional[int] = None) -> List[Dict[str, Any]]:
        with self._lock:
            items = list(self._history)
            if limit is not None:
                items = items[-limit:] if limit > 0 else []
            return items

    def get_statistics(self) -> Dict[str, Any]:
        with self._lock:
            return {
                'identifications': self._identifications,
                'reversible_verdicts': self._reversible_verdicts,
                'synthesized': self._synthesized,
                'graphs_built': self._graphs_built,
                'errors': self._errors,
                'uptime': time.time() - self._start_time,
            }

    def get_full_state(self, limit: Optional[int] = None) -> Dict[str, Any]:
        """Get complete state for API responses"""
        with self._lock:
            return {
                'statistics': self.get_statistics(),
                'history': self.get_history(limit),
            }
