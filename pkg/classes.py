"""
Classes Module
Six classes of reversible rules and the class-to-class transition relation

A class is the organization of unique nodes (4-RMT sets) at a tree level.
Everything here is derived from that organization; the printed tables in
reference_tables are only compared against, never computed with.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Dict, FrozenSet, Iterable, List, Set, Tuple

import reference_tables
from errors import ClassMembershipError, TableMismatchError
from reachability import first_split, organization, successors
from rule_core import (FIRST_CELL_RMTS, LAST_CELL_RMTS, balanced_irreversible_rules,
                       equivalent_rmt, is_balanced_on, reversible_rules, rmt_value,
                       validate_rule)

logger = logging.getLogger(__name__)

NodeSet = FrozenSet[int]
Organization = FrozenSet[NodeSet]


class RuleClass(Enum):
    I = 'I'
    II = 'II'
    III = 'III'
    IV = 'IV'
    V = 'V'
    VI = 'VI'

    def __str__(self):
        return self.value


def _org(*node_sets) -> Organization:
    return frozenset(frozenset(s) for s in node_sets)


_BASE = {
    RuleClass.I: _org({0, 1, 2, 3}, {4, 5, 6, 7}),
    RuleClass.II: _org({0, 1, 4, 5}, {2, 3, 6, 7}),
    RuleClass.III: _org({0, 1, 6, 7}, {2, 3, 4, 5}),
}

ORGANIZATIONS: Dict[RuleClass, Organization] = {
    **_BASE,
    RuleClass.IV: _BASE[RuleClass.I] | _BASE[RuleClass.II],
    RuleClass.V: _BASE[RuleClass.I] | _BASE[RuleClass.III],
    RuleClass.VI: _BASE[RuleClass.II] | _BASE[RuleClass.III],
}

_BY_ORGANIZATION = {org: c for c, org in ORGANIZATIONS.items()}


def node_sets(c: RuleClass) -> Tuple[NodeSet, ...]:
    """Defining node sets of a class, ordered by their smallest RMTs"""
    return tuple(sorted(ORGANIZATIONS[c], key=sorted))


def classify_organization(nodes: Iterable[Iterable[int]]) -> RuleClass:
    org = _org(*nodes)
    try:
        return _BY_ORGANIZATION[org]
    except KeyError:
        raise ClassMembershipError(
            f"Node sets {sorted(sorted(s) for s in org)} match no class") from None


def class_of_level(level) -> RuleClass:
    """Class of a compressed tree level (normalized edge sets)"""
    return classify_organization(organization(level))


# --- Membership ---

def _split(node: NodeSet, rule: int) -> Tuple[NodeSet, NodeSet]:
    zero_side = frozenset(k for k in node if not rmt_value(rule, k))
    return zero_side, node - zero_side


def _splits_cleanly(node: NodeSet, rule: int) -> bool:
    zero_side, one_side = _split(node, rule)
    if len(zero_side) != 2:
        return False
    # equivalent RMTs on one side would collapse into a single edge
    return all(len({equivalent_rmt(k) for k in side}) == 2 for side in (zero_side, one_side))


def is_member(c: RuleClass, rule: int) -> bool:
    return all(_splits_cleanly(node, rule) for node in ORGANIZATIONS[c])


@lru_cache(maxsize=None)
def rules_of_class(c: RuleClass) -> FrozenSet[int]:
    return frozenset(r for r in range(256) if is_member(c, r))


@lru_cache(maxsize=None)
def sorted_rules_of_class(c: RuleClass) -> Tuple[int, ...]:
    return tuple(sorted(rules_of_class(c)))


def is_complete_rule(rule: int) -> bool:
    """Member of every class"""
    validate_rule(rule)
    return all(rule in rules_of_class(c) for c in RuleClass)


@lru_cache(maxsize=None)
def next_class(c: RuleClass, rule: int) -> RuleClass:
    """Class of the next cell after applying rule to a cell of class c"""
    validate_rule(rule)
    if not is_member(c, rule):
        raise ClassMembershipError(f"Rule {rule} is not a member of class {c}")
    children = set()
    for node in ORGANIZATIONS[c]:
        for side in _split(node, rule):
            children.add(successors(side))
    return classify_organization(children)


# --- Boundary cells ---

def canonicalize_boundary_rule(rule: int, position: str) -> int:
    """Zero the don't-care RMT bits of a first or last cell rule"""
    validate_rule(rule)
    if position == 'first':
        return rule & 0x0F
    if position == 'last':
        return rule & 0x55
    raise ValueError(f"Boundary position must be 'first' or 'last', got {position!r}")


def class_of_first_rule(rule: int) -> RuleClass:
    level, _ = first_split(canonicalize_boundary_rule(rule, 'first'))
    if level is None:
        raise ClassMembershipError(f"Rule {rule} is not balanced over RMTs 0..3")
    return class_of_level(level)


@lru_cache(maxsize=None)
def _first_rule_options() -> Tuple[Tuple[int, RuleClass], ...]:
    return tuple((r, class_of_first_rule(r)) for r in range(16)
                 if is_balanced_on(r, FIRST_CELL_RMTS))


def first_rule_options() -> Set[Tuple[int, RuleClass]]:
    return set(_first_rule_options())


@lru_cache(maxsize=None)
def _last_rule_options(c: RuleClass) -> FrozenSet[int]:
    options = set()
    for r in range(256):
        if r & 0xAA or not is_balanced_on(r, LAST_CELL_RMTS):
            continue
        ok = True
        for node in ORGANIZATIONS[c]:
            low, high = sorted(k for k in node if k % 2 == 0)
            if rmt_value(r, low) == rmt_value(r, high):
                ok = False
                break
        if ok:
            options.add(r)
    return frozenset(options)


def last_rule_options(c: RuleClass) -> Set[int]:
    return set(_last_rule_options(c))


# --- Transition relation ---

@dataclass(frozen=True)
class ClassTransition:
    from_class: RuleClass
    rule: int
    to_class: RuleClass


@lru_cache(maxsize=None)
def _transition_table() -> Tuple[ClassTransition, ...]:
    rows = []
    for c in RuleClass:
        for rule in sorted(rules_of_class(c)):
            rows.append(ClassTransition(c, rule, next_class(c, rule)))
    logger.info("[CLASSIFY] derived %d class transitions", len(rows))
    return tuple(rows)


def transition_table() -> List[ClassTransition]:
    return list(_transition_table())


def grouped_transitions(c: RuleClass) -> Dict[RuleClass, FrozenSet[int]]:
    """Rules of class c grouped by the class they lead to"""
    groups: Dict[RuleClass, Set[int]] = {}
    for t in _transition_table():
        if t.from_class is c:
            groups.setdefault(t.to_class, set()).add(t.rule)
    return {target: frozenset(rules) for target, rules in groups.items()}


# --- Comparison with the printed tables ---

@dataclass(frozen=True)
class TableRow:
    table: str
    row: str
    derived: object
    published: object

    @property
    def matches(self) -> bool:
        return self.derived == self.published


def _node_rows(org: Organization) -> Tuple[Tuple[int, ...], ...]:
    return tuple(sorted(tuple(sorted(s)) for s in org))


def _sorted(values) -> Tuple[int, ...]:
    return tuple(sorted(values))


def compare_tables() -> List[TableRow]:
    """Every derived row next to its printed counterpart"""
    rows = [
        TableRow('reversible-rules', 'all',
                 _sorted(reversible_rules()), _sorted(reference_tables.REVERSIBLE_RULES)),
        TableRow('balanced-irreversible', 'all',
                 _sorted(balanced_irreversible_rules()),
                 _sorted(reference_tables.BALANCED_IRREVERSIBLE_RULES)),
    ]

    for c in RuleClass:
        printed_nodes, printed_rules = reference_tables.CLASS_TABLE[c.value]
        rows.append(TableRow('class-nodes', c.value,
                             _node_rows(ORGANIZATIONS[c]), _node_rows(_org(*printed_nodes))))
        rows.append(TableRow('class-table', c.value,
                             _sorted(rules_of_class(c)), _sorted(printed_rules)))

    for c in RuleClass:
        derived = grouped_transitions(c)
        printed = {RuleClass(target): frozenset(rules)
                   for rules, target in reference_tables.CLASS_TRANSITIONS[c.value]}
        for target in RuleClass:
            if target not in derived and target not in printed:
                continue
            rows.append(TableRow('class-transitions', f"{c.value} -> {target.value}",
                                 _sorted(derived.get(target, ())),
                                 _sorted(printed.get(target, ()))))

    derived_first = {rule: c.value for rule, c in _first_rule_options()}
    for rule in sorted(set(derived_first) | set(reference_tables.FIRST_RULES)):
        rows.append(TableRow('first-rules', str(rule),
                             derived_first.get(rule), reference_tables.FIRST_RULES.get(rule)))

    for c in RuleClass:
        rows.append(TableRow('last-rules', c.value,
                             _sorted(_last_rule_options(c)),
                             _sorted(reference_tables.LAST_RULES[c.value])))
    return rows


def assert_tables_match():
    mismatches = [row for row in compare_tables() if not row.matches]
    if mismatches:
        logger.error("[CLASSIFY] %d table rows differ from the printed tables", len(mismatches))
        raise TableMismatchError(mismatches)
