"""
Synthesis Module
Random generation of n-cell reversible CAs

Two generators share one contract: any object with choice(seq) and
getrandbits(k) drives them, so a seeded random.Random gives reproducible
vectors and a scripted chooser can replay a known construction.
"""

import logging
import random
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Tuple

import numpy as np

import config
from automaton import RuleVector
from classes import (canonicalize_boundary_rule, class_of_first_rule, last_rule_options,
                     next_class, sorted_rules_of_class)
from errors import CaError, CellCountError
from reachability import Level, advance, compile_identifier, first_split, last_collision
from rule_core import FIRST_CELL_RMTS, is_balanced_on, reversible_rules, rmt_value

logger = logging.getLogger(__name__)

TREE = 'tree'
CLASSWALK = 'classwalk'
METHODS = (TREE, CLASSWALK)

# Canonical boundary choices: every don't-care RMT bit zero
FIRST_RULES = tuple(r for r in range(16) if is_balanced_on(r, FIRST_CELL_RMTS))
SINGLE_CELL_RULES = (1, 4)

FIRST_DONTCARE_MASK = 0xF0
LAST_DONTCARE_MASK = 0xAA
SINGLE_DONTCARE_MASK = 0xFA


@dataclass(frozen=True)
class SynthesisRequest:
    n: int
    seed: int
    method: str = config.DEFAULT_SYNTHESIS_METHOD
    randomize_dontcares: bool = config.RANDOMIZE_DONTCARES

    def __post_init__(self):
        if self.method not in METHODS:
            raise CaError(f"Unknown synthesis method {self.method!r}, expected one of {METHODS}")
        if self.n < 1:
            raise CellCountError(f"Cannot synthesize a CA with {self.n} cells")
        if self.method == CLASSWALK and self.n < 2:
            raise CellCountError("The class walk needs at least two cells")


def new_seed() -> int:
    return random.SystemRandom().getrandbits(config.SEED_BITS)


def _fill(rule: int, rng, mask: int, randomize: bool) -> int:
    if not randomize:
        return rule
    return rule | (rng.getrandbits(8) & mask)


# --- Tree construction ---

@lru_cache(maxsize=None)
def _interior_candidates(level: Level) -> Tuple[int, ...]:
    """Every rule that keeps the tree of this level complete"""
    return tuple(r for r in range(256) if advance(level, r)[0] is not None)


@lru_cache(maxsize=None)
def _last_candidates(level: Level) -> Tuple[int, ...]:
    return tuple(r for r in range(256)
                 if not r & LAST_DONTCARE_MASK and last_collision(level, r) is None)


def synthesize_tree(n: int, rng, randomize_dontcares: bool = False) -> RuleVector:
    """
    Grow the compressed tree cell by cell, picking each rule among those
    that split every current node 2/2 without a collapse
    """
    if n < 1:
        raise CellCountError(f"Cannot synthesize a CA with {n} cells")
    if n == 1:
        rule = rng.choice(SINGLE_CELL_RULES)
        return RuleVector((_fill(rule, rng, SINGLE_DONTCARE_MASK, randomize_dontcares),))

    first = rng.choice(FIRST_RULES)
    level, _ = first_split(first)
    rules = [_fill(first, rng, FIRST_DONTCARE_MASK, randomize_dontcares)]
    for _ in range(n - 2):
        rule = rng.choice(_interior_candidates(level))
        level = advance(level, rule)[0]
        rules.append(rule)
    last = rng.choice(_last_candidates(level))
    rules.append(_fill(last, rng, LAST_DONTCARE_MASK, randomize_dontcares))
    return RuleVector(tuple(rules))


# --- Class table walk ---

def synthesize_classwalk(n: int, rng, randomize_dontcares: bool = False) -> RuleVector:
    """First rule from the first-rule table, interior rules from the class of
    each cell, last rule from the last-rule table of the final class"""
    if n < 2:
        raise CellCountError("The class walk needs at least two cells")
    first = rng.choice(FIRST_RULES)
    cls = class_of_first_rule(first)
    rules = [_fill(first, rng, FIRST_DONTCARE_MASK, randomize_dontcares)]
    for _ in range(n - 2):
        rule = rng.choice(sorted_rules_of_class(cls))
        cls = next_class(cls, rule)
        rules.append(rule)
    last = rng.choice(sorted(last_rule_options(cls)))
    rules.append(_fill(last, rng, LAST_DONTCARE_MASK, randomize_dontcares))
    return RuleVector(tuple(rules))


def synthesize(n: int, seed: Optional[int] = None, method: Optional[str] = None,
               randomize_dontcares: Optional[bool] = None) -> RuleVector:
    request = SynthesisRequest(
        n=n,
        seed=new_seed() if seed is None else seed,
        method=method or config.DEFAULT_SYNTHESIS_METHOD,
        randomize_dontcares=(config.RANDOMIZE_DONTCARES if randomize_dontcares is None
                             else randomize_dontcares),
    )
    rng = random.Random(request.seed)
    generate = synthesize_tree if request.method == TREE else synthesize_classwalk
    rv = generate(request.n, rng, request.randomize_dontcares)
    logger.info("[SYNTH] %s n=%d seed=%d -> %s", request.method, request.n, request.seed, rv)
    return rv


# --- Exhaustive counting ---

def _alphabet(alphabet: str) -> Tuple[int, ...]:
    if alphabet == 'all':
        return tuple(range(256))
    if alphabet == 'reversible':
        return reversible_rules()
    raise CaError(f"Unknown rule alphabet {alphabet!r}, expected 'all' or 'reversible'")


def count_reversible(n: int, alphabet: str = 'all', canonical: bool = False) -> int:
    """
    Number of reversible n-cell rule vectors over the alphabet.
    In canonical mode boundary rules are counted once per effective form
    (don't-care bits zeroed).
    """
    if not 1 <= n <= config.MAX_COUNT_CELLS:
        raise CellCountError(f"Exhaustive counting supports 1..{config.MAX_COUNT_CELLS} cells, got {n}")
    rules = _alphabet(alphabet)
    first_rules = rules
    last_rules = rules
    if canonical:
        first_rules = tuple(sorted({canonicalize_boundary_rule(r, 'first') for r in rules}))
        last_rules = tuple(sorted({canonicalize_boundary_rule(r, 'last') for r in rules}))

    if n == 1:
        return sum(1 for r in first_rules if rmt_value(r, 0) != rmt_value(r, 2))

    ident = compile_identifier()
    states = len(ident.levels)
    counts = np.zeros(states, dtype=np.int64)
    firsts = ident.first[list(first_rules)]
    np.add.at(counts, firsts[firsts >= 0], 1)

    interior = list(rules)
    for _ in range(n - 2):
        nxt = np.zeros(states, dtype=np.int64)
        for state in np.flatnonzero(counts):
            targets = ident.step[state, interior]
            np.add.at(nxt, targets[targets >= 0], counts[state])
        counts = nxt

    endings = ident.last_ok[:, list(last_rules)].sum(axis=1)
    total = int((counts * endings).sum())
    logger.info("[SYNTH] count n=%d alphabet=%s canonical=%s -> %d", n, alphabet, canonical, total)
    return total
