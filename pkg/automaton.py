"""
Automaton Module
State representation and next-state evolution of a null boundary hybrid CA
"""

from dataclasses import dataclass
from typing import Iterable, Iterator, List, Sequence, Tuple, Union

from errors import (CellCountError, LengthMismatchError, RuleRangeError,
                    RuleVectorFormatError, StateFormatError)
from rule_core import complement_rule, validate_rule


@dataclass(frozen=True)
class RuleVector:
    """
    Ordered rules of an n-cell CA, cell 1 first
    Cells beyond both ends are permanently 0 (null boundary)
    """
    rules: Tuple[int, ...]

    def __post_init__(self):
        if not self.rules:
            raise CellCountError("Rule vector must have at least one cell")
        for rule in self.rules:
            validate_rule(rule)

    @classmethod
    def of(cls, rules: Union['RuleVector', Iterable[int]]) -> 'RuleVector':
        if isinstance(rules, cls):
            return rules
        return cls(tuple(rules))

    @property
    def n(self) -> int:
        return len(self.rules)

    def __len__(self) -> int:
        return len(self.rules)

    def __iter__(self) -> Iterator[int]:
        return iter(self.rules)

    def __getitem__(self, index):
        return self.rules[index]

    def __str__(self) -> str:
        return format_rule_vector(self)


@dataclass(frozen=True)
class CaState:
    """
    n-bit configuration packed into an integer, cell 1 at the most
    significant position so the binary string reads cell 1 first
    """
    value: int
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise CellCountError("A state must have at least one cell")
        if not 0 <= self.value < (1 << self.n):
            raise StateFormatError(f"State value {self.value} does not fit in {self.n} cells")

    @classmethod
    def from_bits(cls, bits: Sequence[int]) -> 'CaState':
        value = 0
        for bit in bits:
            if bit not in (0, 1):
                raise StateFormatError(f"State bits must be 0 or 1, got {bit!r}")
            value = (value << 1) | bit
        return cls(value, len(bits))

    @property
    def bits(self) -> Tuple[int, ...]:
        return tuple((self.value >> (self.n - 1 - i)) & 1 for i in range(self.n))

    def __str__(self) -> str:
        return format_state(self)


# --- Text forms ---

def parse_rule_vector(text: str) -> RuleVector:
    """Parse comma-separated decimal rules, e.g. '90,15,85,15'"""
    tokens = [token.strip() for token in str(text).split(',')]
    if not tokens or any(token == '' for token in tokens):
        raise RuleVectorFormatError(f"Malformed rule vector {text!r}")
    rules = []
    for token in tokens:
        if not (token.isascii() and token.isdigit()):
            raise RuleVectorFormatError(f"Rule {token!r} in {text!r} is not a decimal integer")
        value = int(token)
        if value > 255:
            raise RuleRangeError(f"Rule {value} out of range [0, 255]")
        rules.append(value)
    return RuleVector(tuple(rules))


def format_rule_vector(rv: Union[RuleVector, Iterable[int]]) -> str:
    return ','.join(str(rule) for rule in rv)


def parse_state(text: str, n: int = None) -> CaState:
    """Parse a binary string, cell 1 first, e.g. '0011'"""
    text = str(text).strip()
    if not text or any(ch not in '01' for ch in text):
        raise StateFormatError(f"State {text!r} is not a binary string")
    if n is not None and len(text) != n:
        raise LengthMismatchError(f"State {text!r} has {len(text)} cells, expected {n}")
    return CaState(int(text, 2), len(text))


def format_state(state: CaState) -> str:
    return format(state.value, f'0{state.n}b')


# --- Evolution ---

def _check_lengths(rv: RuleVector, state: CaState):
    if rv.n != state.n:
        raise LengthMismatchError(f"Rule vector has {rv.n} cells but state has {state.n}")


def rmt_windows(state: CaState) -> List[int]:
    """
    RMT seen by each cell, computed with the sliding window recurrence
    window(i+1) = (2 * window(i) + s[i+1]) mod 8, padding 0 on the right
    """
    bits = state.bits + (0,)
    window = bits[0]
    windows = []
    for i in range(state.n):
        window = (2 * window + bits[i + 1]) % 8
        windows.append(window)
    return windows


def next_state(rv: Union[RuleVector, Iterable[int]], state: CaState) -> CaState:
    rv = RuleVector.of(rv)
    _check_lengths(rv, state)
    n = state.n
    padded = state.value << 1
    result = 0
    for i, rule in enumerate(rv.rules):
        shift = n - 1 - i
        window = (padded >> shift) & 7
        result |= ((rule >> window) & 1) << shift
    return CaState(result, n)


def evolve(rv: Union[RuleVector, Iterable[int]], s0: CaState, steps: int) -> List[CaState]:
    """[s0, next(s0), ...] of length steps + 1"""
    rv = RuleVector.of(rv)
    _check_lengths(rv, s0)
    if steps < 0:
        raise CellCountError(f"Steps must be non-negative, got {steps}")
    states = [s0]
    for _ in range(steps):
        states.append(next_state(rv, states[-1]))
    return states


def uniform(rule: int, n: int) -> RuleVector:
    if n < 1:
        raise CellCountError("A uniform CA needs at least one cell")
    return RuleVector((validate_rule(rule),) * n)


def complement_vector(rv: Union[RuleVector, Iterable[int]]) -> RuleVector:
    return RuleVector(tuple(complement_rule(rule) for rule in RuleVector.of(rv)))
