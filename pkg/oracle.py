"""
Oracle Module
Brute-force state transition graphs for small CAs

Exponential in n. Used as ground truth for the linear-time decision and
for the diagrams served by the CLI and the API.
"""

import logging
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Dict, Iterable, Iterator, List, Union

import numpy as np
import psutil

import config
from automaton import CaState, RuleVector
from errors import OracleLimitError

logger = logging.getLogger(__name__)

# successor (int64) + predecessor count (int64) + one chunk of scratch
BYTES_PER_STATE = 24


@dataclass(frozen=True)
class StateTransitionGraph:
    rules: RuleVector
    successor: np.ndarray
    predecessor_count: np.ndarray

    @property
    def n(self) -> int:
        return self.rules.n

    @property
    def size(self) -> int:
        return 1 << self.n


def _check_limits(n: int):
    if n > config.MAX_ORACLE_CELLS:
        raise OracleLimitError(
            f"State transition graph limited to {config.MAX_ORACLE_CELLS} cells, got {n}")
    needed = BYTES_PER_STATE * (1 << n)
    allowed = psutil.virtual_memory().available * config.ORACLE_MEMORY_HEADROOM
    if needed > allowed:
        raise OracleLimitError(
            f"{n}-cell graph needs {needed / 1e6:.0f} MB, only {allowed / 1e6:.0f} MB allowed")


def _successors(rules, n: int, start: int, stop: int) -> np.ndarray:
    """next_state for the states start..stop-1 at once"""
    padded = np.arange(start, stop, dtype=np.int64) << 1
    result = np.zeros(stop - start, dtype=np.int64)
    for i, rule in enumerate(rules):
        shift = n - 1 - i
        window = (padded >> shift) & 7
        result |= ((rule >> window) & 1) << shift
    return result


def build_stg(rv: Union[RuleVector, Iterable[int]]) -> StateTransitionGraph:
    rv = RuleVector.of(rv)
    n = rv.n
    _check_limits(n)
    size = 1 << n
    successor = np.empty(size, dtype=np.int64)
    bounds = [(start, min(start + config.ORACLE_CHUNK_SIZE, size))
              for start in range(0, size, config.ORACLE_CHUNK_SIZE)]

    def fill(bound):
        start, stop = bound
        successor[start:stop] = _successors(rv.rules, n, start, stop)

    if len(bounds) == 1:
        fill(bounds[0])
    else:
        with ThreadPoolExecutor(max_workers=config.ORACLE_WORKERS) as pool:
            list(pool.map(fill, bounds))

    predecessor_count = np.bincount(successor, minlength=size)
    # a finite map misses a state exactly when it merges two others
    assert (predecessor_count == 0).any() == (predecessor_count >= 2).any()

    successor.flags.writeable = False
    predecessor_count.flags.writeable = False
    logger.debug("[ORACLE] built %d-state graph for %s", size, rv)
    return StateTransitionGraph(rv, successor, predecessor_count)


def is_bijective(stg: StateTransitionGraph) -> bool:
    return bool((stg.predecessor_count == 1).all())


def non_reachable_states(stg: StateTransitionGraph) -> List[CaState]:
    """Garden-of-Eden states: no predecessor at all"""
    return [CaState(int(s), stg.n) for s in np.flatnonzero(stg.predecessor_count == 0)]


def multi_predecessor_states(stg: StateTransitionGraph) -> List[CaState]:
    return [CaState(int(s), stg.n) for s in np.flatnonzero(stg.predecessor_count >= 2)]


def cycle_structure(stg: StateTransitionGraph) -> Counter:
    """Lengths of the terminal cycles of the functional graph, with multiplicity"""
    successor = stg.successor.tolist()
    visited_by = [0] * stg.size
    cycles = Counter()
    for start in range(stg.size):
        if visited_by[start]:
            continue
        run = start + 1
        path_index: Dict[int, int] = {}
        state = start
        while not visited_by[state]:
            visited_by[state] = run
            path_index[state] = len(path_index)
            state = successor[state]
        if visited_by[state] == run:
            cycles[len(path_index) - path_index[state]] += 1
    return cycles


def summary(stg: StateTransitionGraph) -> Dict:
    cycles = cycle_structure(stg)
    return {
        'rules': str(stg.rules),
        'n': stg.n,
        'bijective': is_bijective(stg),
        'non_reachable': int((stg.predecessor_count == 0).sum()),
        'max_predecessors': int(stg.predecessor_count.max()),
        'cycle_type': [[length, count] for length, count in sorted(cycles.items())],
    }


def to_dot(stg: StateTransitionGraph) -> Iterator[str]:
    """DOT text, one directed edge per state; non-reachable states dashed"""
    def label(s):
        return f'"{format(s, f"0{stg.n}b")}"'

    yield f'digraph "{stg.rules}" {{'
    yield '  node [shape=circle];'
    for s in np.flatnonzero(stg.predecessor_count == 0):
        yield f'  {label(int(s))} [style=dashed];'
    for s, t in enumerate(stg.successor.tolist()):
        yield f'  {label(s)} -> {label(t)};'
    yield '}'


# --- Exhaustive 3-cell sweep ---

_POWERS = np.array([1 << k for k in range(8)], dtype=np.uint8)


def bijective_mask_n3() -> np.ndarray:
    """
    Bijectivity of every 3-cell vector, indexed [r1, r2, r3].
    Each of the 8 states marks its image in a per-vector bitmap; a vector
    is bijective when all 8 images are hit.
    """
    rules = np.arange(256)
    bits = np.array([(rules >> w) & 1 for w in range(8)], dtype=np.uint8)
    seen = np.zeros((256, 256, 256), dtype=np.uint8)
    for state in range(8):
        b1, b2, b3 = (state >> 2) & 1, (state >> 1) & 1, state & 1
        w1 = (b1 << 1) | b2
        w2 = (b1 << 2) | (b2 << 1) | b3
        w3 = (b2 << 2) | (b3 << 1)
        image = (bits[w1][:, None, None] << 2) | (bits[w2][None, :, None] << 1) | bits[w3][None, None, :]
        seen |= _POWERS[image]
    return seen == 0xFF
