"""
Reachability Module
Compressed reachability tree and the linear-time reversibility decision

The walk keeps, per level, the unique sets of RMTs that label the edges
into the next cell. Sets are stored normalized (RMTs 4..7 replaced by their
equivalents 0..3), so a level is a frozenset of at most four 2-element sets
and the whole walk is a finite automaton over the rules of the vector.
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from itertools import chain
from typing import Dict, FrozenSet, Iterable, List, Optional, Tuple, Union

import numpy as np

import config
from automaton import RuleVector
from errors import NodeBoundError, RuleRangeError
from rule_core import FIRST_CELL_RMTS, equivalent_rmt, next_rmts, rmt_value

logger = logging.getLogger(__name__)

RmtSet = FrozenSet[int]
Level = FrozenSet[RmtSet]

UNBALANCED_SPLIT = 'unbalanced-split'
SINGLETON_AFTER_NORMALIZATION = 'singleton-after-normalization'
LAST_CELL_COLLISION = 'last-cell-collision'
FIRST_CELL_IMBALANCE = 'first-cell-imbalance'

# Unique nodes per level of a reversible CA never exceed this
MAX_UNIQUE_NODES = 4

ROOT: RmtSet = frozenset(FIRST_CELL_RMTS)


@dataclass(frozen=True)
class Witness:
    level: int
    node: RmtSet
    reason: str

    @property
    def cell(self) -> int:
        # nodes at level k are consumed by the rule of cell k + 1
        return self.level + 1


@dataclass(frozen=True)
class Verdict:
    reversible: bool
    witness: Optional[Witness] = None
    max_unique_nodes: int = 0

    def __post_init__(self):
        if self.reversible == (self.witness is not None):
            raise ValueError("A witness is present exactly when the CA is irreversible")

    def to_record(self) -> Dict:
        return {
            'reversible': self.reversible,
            'witness_level': self.witness.level if self.witness else None,
            'reason': self.witness.reason if self.witness else None,
            'witness_cell': self.witness.cell if self.witness else None,
            'witness_node': sorted(self.witness.node) if self.witness else None,
            'max_unique_nodes': self.max_unique_nodes,
        }


@dataclass(frozen=True)
class CompressedTreeLevel:
    level: int
    nodes: Tuple[RmtSet, ...]


# --- Node operations ---

def successors(node: Iterable[int]) -> RmtSet:
    """RMTs of the next cell reachable from the RMTs of a node"""
    return frozenset(chain.from_iterable(next_rmts(k) for k in node))


def split_node(node: Iterable[int], rule: int) -> Tuple[RmtSet, RmtSet]:
    """Partition the successor RMTs of node by the rule's output bit"""
    succ = successors(node)
    zero_set = frozenset(k for k in succ if not rmt_value(rule, k))
    return zero_set, succ - zero_set


def normalize(rmts: Iterable[int]) -> RmtSet:
    return frozenset(equivalent_rmt(k) for k in rmts)


def organization(level: Iterable[RmtSet]) -> FrozenSet[RmtSet]:
    """The 4-RMT node sets a level's edge sets lead to"""
    return frozenset(successors(node) for node in level)


# --- Automaton steps (memoised: a level has finitely many shapes) ---

@lru_cache(maxsize=None)
def first_split(rule: int) -> Tuple[Optional[Level], Optional[str]]:
    zero_set = frozenset(k for k in ROOT if not rmt_value(rule, k))
    one_set = ROOT - zero_set
    if len(zero_set) != len(one_set):
        return None, FIRST_CELL_IMBALANCE
    return frozenset({zero_set, one_set}), None


@lru_cache(maxsize=None)
def advance(level: Level, rule: int) -> Tuple[Optional[Level], Optional[RmtSet], Optional[str]]:
    """
    Scan one interior rule over every node of the level.
    Returns (next level, None, None) or (None, failing node, reason).
    """
    unique = set()
    for node in sorted(level, key=sorted):
        zero_set, one_set = split_node(node, rule)
        if len(zero_set) != len(one_set):
            return None, node, UNBALANCED_SPLIT
        for part in (zero_set, one_set):
            merged = normalize(part)
            if len(merged) == 1:
                return None, node, SINGLETON_AFTER_NORMALIZATION
            unique.add(merged)
    if len(unique) > MAX_UNIQUE_NODES:
        raise NodeBoundError(f"{len(unique)} unique nodes after rule {rule}")
    return frozenset(unique), None, None


@lru_cache(maxsize=None)
def last_collision(level: Level, rule: int) -> Optional[RmtSet]:
    """First node whose two effective (even) successors share an output bit"""
    for node in sorted(level, key=sorted):
        effective = [k for k in successors(node) if k % 2 == 0]
        if rmt_value(rule, effective[0]) == rmt_value(rule, effective[1]):
            return node
    return None


def _single_cell(rule: int) -> Verdict:
    # both neighbors are null: only RMTs 0 and 2 occur
    if rmt_value(rule, 0) != rmt_value(rule, 2):
        return Verdict(True, max_unique_nodes=1)
    return Verdict(False, Witness(0, frozenset({0, 2}), FIRST_CELL_IMBALANCE), 1)


def _rules_of(rv: Union[RuleVector, Iterable[int]]) -> Tuple[int, ...]:
    return RuleVector.of(rv).rules


def identify_reversible(rv: Union[RuleVector, Iterable[int]]) -> Verdict:
    """Decide reversibility in one left-to-right scan of the rule vector"""
    rules = _rules_of(rv)
    n = len(rules)
    if n == 1:
        return _single_cell(rules[0])

    level, reason = first_split(rules[0])
    if level is None:
        return Verdict(False, Witness(0, ROOT, reason), 1)
    max_nodes = len(level)

    for i in range(1, n - 1):
        nxt, node, reason = advance(level, rules[i])
        if nxt is None:
            return Verdict(False, Witness(i, node, reason), max_nodes)
        level = nxt
        max_nodes = max(max_nodes, len(level))
        if config.DEBUG_REACHABILITY:
            logger.debug("[REACH] level %d after rule %d: %s", i, rules[i],
                         sorted(sorted(s) for s in level))

    node = last_collision(level, rules[-1])
    if node is not None:
        return Verdict(False, Witness(n - 1, node, LAST_CELL_COLLISION), max_nodes)
    return Verdict(True, max_unique_nodes=max_nodes)


def compressed_tree(rv: Union[RuleVector, Iterable[int]]) -> List[CompressedTreeLevel]:
    """
    Level 0 is the root {0,1,2,3}; level k (1 <= k <= n-2) lists the unique
    normalized sets held after scanning rule k+1. An irreversible vector
    yields the levels up to the one where the walk failed.
    """
    rules = _rules_of(rv)
    levels = [CompressedTreeLevel(0, (ROOT,))]
    if len(rules) < 3:
        return levels
    level, _ = first_split(rules[0])
    if level is None:
        return levels
    for k in range(1, len(rules) - 1):
        level, _, _ = advance(level, rules[k])
        if level is None:
            break
        levels.append(CompressedTreeLevel(k, tuple(sorted(level, key=sorted))))
    return levels


# --- Compiled form for bulk decisions ---

@dataclass(frozen=True)
class CompiledIdentifier:
    """
    The identification automaton as integer tables
    first[rule] -> state id (-1 on failure)
    step[state, rule] -> state id (-1 on failure)
    last_ok[state, rule] -> bool
    """
    levels: Tuple[Level, ...]
    first: np.ndarray
    step: np.ndarray
    last_ok: np.ndarray

    def identify_batch(self, vectors: np.ndarray) -> np.ndarray:
        """Verdicts for a (count, n) array of rule vectors"""
        vectors = np.asarray(vectors, dtype=np.int64)
        if vectors.ndim != 2 or vectors.shape[1] < 1:
            raise ValueError("Expected a 2-D array of rule vectors")
        if vectors.size and (vectors.min() < 0 or vectors.max() > 255):
            raise RuleRangeError("Rule codes must lie in 0..255")
        if vectors.shape[1] == 1:
            rules = vectors[:, 0]
            return ((rules >> 0) & 1) != ((rules >> 2) & 1)
        state = self.first[vectors[:, 0]]
        for i in range(1, vectors.shape[1] - 1):
            state = np.where(state >= 0, self.step[np.maximum(state, 0), vectors[:, i]], -1)
        return (state >= 0) & self.last_ok[np.maximum(state, 0), vectors[:, -1]]

    def identify_all_n3(self) -> np.ndarray:
        """Verdict for every 3-cell vector, indexed [r1, r2, r3]"""
        s1 = self.first
        s2 = np.where(s1[:, None] >= 0, self.step[np.maximum(s1, 0)], -1)
        return (s2[:, :, None] >= 0) & self.last_ok[np.maximum(s2, 0)]


@lru_cache(maxsize=None)
def compile_identifier() -> CompiledIdentifier:
    """Enumerate every reachable level shape and tabulate all transitions"""
    ids: Dict[Level, int] = {}
    order: List[Level] = []

    def intern(level: Level) -> int:
        if level not in ids:
            ids[level] = len(order)
            order.append(level)
        return ids[level]

    first = np.full(256, -1, dtype=np.int64)
    for rule in range(256):
        level, _ = first_split(rule)
        if level is not None:
            first[rule] = intern(level)

    rows = []
    index = 0
    while index < len(order):
        row = np.full(256, -1, dtype=np.int64)
        for rule in range(256):
            nxt, _, _ = advance(order[index], rule)
            if nxt is not None:
                row[rule] = intern(nxt)
        rows.append(row)
        index += 1

    last_ok = np.array([[last_collision(level, rule) is None for rule in range(256)]
                        for level in order], dtype=bool)
    logger.info("[REACH] compiled identifier with %d level shapes", len(order))
    return CompiledIdentifier(tuple(order), first, np.vstack(rows), last_ok)
