"""
Rule Core Module
Bit-level algebra of 3-neighborhood rules and their Rule Min Terms (RMTs)

A rule is an 8-bit truth table: bit k of the code is the next state for the
neighborhood whose (left, self, right) bits spell k in binary.
"""

from functools import lru_cache
from typing import FrozenSet, Iterable, Tuple

from errors import OddMaskError, RuleRangeError

Rule = int
RmtIndex = int
RmtMask = FrozenSet[int]

ALL_RMTS: RmtMask = frozenset(range(8))

# Effective RMTs under null boundary: the left neighbor of cell 1 and the
# right neighbor of cell n are always 0
FIRST_CELL_RMTS: RmtMask = frozenset({0, 1, 2, 3})
LAST_CELL_RMTS: RmtMask = frozenset({0, 2, 4, 6})
SINGLE_CELL_RMTS: RmtMask = frozenset({0, 2})

LINEAR_ADDITIVE_RULES: FrozenSet[int] = frozenset(
    {15, 51, 60, 85, 90, 102, 105, 150, 153, 165, 170, 195, 204, 240}
)

# A balanced rule that is constant on any of these is irreversible
IRREVERSIBLE_QUADRUPLES: Tuple[Tuple[int, ...], ...] = (
    (0, 2, 3, 4),
    (0, 4, 6, 7),
    (0, 1, 2, 6),
    (0, 1, 3, 7),
)


def validate_rule(value) -> Rule:
    """Return value as a rule code or raise RuleRangeError"""
    if isinstance(value, bool) or not isinstance(value, int):
        raise RuleRangeError(f"Rule must be an integer, got {value!r}")
    if not 0 <= value <= 255:
        raise RuleRangeError(f"Rule {value} out of range [0, 255]")
    return value


def parse_rule(text: str) -> Rule:
    """Parse a decimal rule code"""
    try:
        value = int(str(text).strip(), 10)
    except ValueError:
        raise RuleRangeError(f"Rule {text!r} is not a decimal integer") from None
    return validate_rule(value)


def rmt_value(rule: Rule, k: RmtIndex) -> int:
    return (rule >> k) & 1


def rule_bits(rule: Rule) -> Tuple[int, ...]:
    """The 8 output bits of a rule, indexed by RMT"""
    return tuple((rule >> k) & 1 for k in range(8))


def rmt_neighborhood(k: RmtIndex) -> Tuple[int, int, int]:
    """Decode an RMT into its (left, self, right) bits"""
    return (k >> 2) & 1, (k >> 1) & 1, k & 1


def rmt_index(left: int, self_bit: int, right: int) -> RmtIndex:
    return (left << 2) | (self_bit << 1) | right


def is_balanced(rule: Rule) -> bool:
    return bin(rule).count('1') == 4


def complement_rule(rule: Rule) -> Rule:
    return 255 - rule


def is_linear_additive(rule: Rule) -> bool:
    return rule in LINEAR_ADDITIVE_RULES


def next_rmts(k: RmtIndex) -> Tuple[RmtIndex, RmtIndex]:
    """RMTs of cell i+1 that can follow RMT k of cell i (window shifted by one)"""
    return (2 * k) % 8, (2 * k + 1) % 8


def equivalent_rmt(k: RmtIndex) -> RmtIndex:
    """Canonical representative of k; k and k+4 have the same successors"""
    return k % 4


def sibling_rmt(k: RmtIndex) -> RmtIndex:
    """The RMT produced together with k by the same parent"""
    return k ^ 1


def is_balanced_on(rule: Rule, mask: Iterable[int]) -> bool:
    """True iff exactly half of the RMTs in mask map to 1"""
    members = frozenset(mask)
    if not members <= ALL_RMTS:
        raise RuleRangeError(f"RMT mask {sorted(members)} has members outside 0..7")
    if len(members) % 2:
        raise OddMaskError(f"Cannot balance a rule over {len(members)} RMTs")
    ones = sum(rmt_value(rule, k) for k in members)
    return 2 * ones == len(members)


def effective_rmts(position: str) -> RmtMask:
    """RMTs whose output bit matters for a cell at the given position"""
    masks = {
        'first': FIRST_CELL_RMTS,
        'last': LAST_CELL_RMTS,
        'single': SINGLE_CELL_RMTS,
        'interior': ALL_RMTS,
    }
    try:
        return masks[position]
    except KeyError:
        raise ValueError(f"Unknown cell position {position!r}") from None


def is_reversible_rule(rule: Rule) -> bool:
    """
    A rule that can appear in some reversible rule vector.
    Unbalanced rules never can; balanced ones fail only when constant on
    one of IRREVERSIBLE_QUADRUPLES.
    """
    if not is_balanced(rule):
        return False
    for quad in IRREVERSIBLE_QUADRUPLES:
        if len({rmt_value(rule, k) for k in quad}) == 1:
            return False
    return True


@lru_cache(maxsize=None)
def reversible_rules() -> Tuple[Rule, ...]:
    return tuple(r for r in range(256) if is_reversible_rule(r))


@lru_cache(maxsize=None)
def balanced_irreversible_rules() -> Tuple[Rule, ...]:
    return tuple(r for r in range(256) if is_balanced(r) and not is_reversible_rule(r))
