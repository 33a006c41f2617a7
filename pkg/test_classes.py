import pytest

import reference_tables
from classes import (RuleClass, assert_tables_match, canonicalize_boundary_rule,
                     class_of_first_rule, classify_organization, compare_tables,
                     first_rule_options, grouped_transitions, is_complete_rule,
                     last_rule_options, next_class, node_sets, rules_of_class,
                     transition_table)
from errors import ClassMembershipError, TableMismatchError
from rule_core import reversible_rules

I, II, III, IV, V, VI = (RuleClass.I, RuleClass.II, RuleClass.III,
                         RuleClass.IV, RuleClass.V, RuleClass.VI)


@pytest.mark.parametrize('cls', list(RuleClass))
def test_rules_of_class_match_class_table(cls):
    _, printed = reference_tables.CLASS_TABLE[cls.value]
    assert rules_of_class(cls) == printed


def test_class_sizes():
    sizes = {c: len(rules_of_class(c)) for c in RuleClass}
    assert sizes == {I: 36, II: 16, III: 36, IV: 6, V: 18, VI: 6}


def test_combined_classes_are_intersections():
    assert rules_of_class(IV) == rules_of_class(I) & rules_of_class(II)
    assert rules_of_class(V) == rules_of_class(I) & rules_of_class(III)
    assert rules_of_class(VI) == rules_of_class(II) & rules_of_class(III)


def test_classes_cover_the_reversible_rules():
    union = set().union(*(rules_of_class(c) for c in RuleClass))
    assert union == set(reversible_rules())


def test_node_sets():
    assert node_sets(I) == (frozenset({0, 1, 2, 3}), frozenset({4, 5, 6, 7}))
    assert len(node_sets(IV)) == 4
    for c in (I, II, III):
        first, second = node_sets(c)
        assert first | second == set(range(8))
        # built from sibling pairs
        assert all(k ^ 1 in first for k in first)


def test_classify_organization():
    assert classify_organization([{0, 1, 6, 7}, {2, 3, 4, 5}]) is III
    with pytest.raises(ClassMembershipError):
        classify_organization([{0, 1, 2, 3}])


def test_complete_rules():
    complete = {r for r in range(256) if is_complete_rule(r)}
    assert complete == {90, 105, 150, 165}
    assert not is_complete_rule(15)
    assert not is_complete_rule(204)


@pytest.mark.parametrize('cls, rule, expected', [
    (I, 85, II),
    (III, 177, V),
    (V, 170, II),
    (IV, 105, V),
    (VI, 240, I),
])
def test_next_class(cls, rule, expected):
    assert next_class(cls, rule) is expected


def test_class_two_always_leads_to_class_one():
    assert {next_class(II, r) for r in rules_of_class(II)} == {I}


def test_next_class_rejects_non_member():
    with pytest.raises(ClassMembershipError):
        next_class(I, 15)


@pytest.mark.parametrize('cls', list(RuleClass))
def test_transitions_match_printed_table(cls):
    printed = {RuleClass(target): frozenset(rules)
               for rules, target in reference_tables.CLASS_TRANSITIONS[cls.value]}
    assert grouped_transitions(cls) == printed


def test_transition_relation_is_total_and_closed():
    table = transition_table()
    assert len(table) == sum(len(rules_of_class(c)) for c in RuleClass)
    seen = {(t.from_class, t.rule) for t in table}
    assert len(seen) == len(table)
    assert all(isinstance(t.to_class, RuleClass) for t in table)


def test_first_rule_options():
    options = first_rule_options()
    assert options == {(3, I), (12, I), (5, II), (10, II), (6, III), (9, III)}


def test_class_of_first_rule():
    assert class_of_first_rule(9) is III
    assert class_of_first_rule(105) is III
    with pytest.raises(ClassMembershipError):
        class_of_first_rule(7)


@pytest.mark.parametrize('cls', list(RuleClass))
def test_last_rule_options(cls):
    assert last_rule_options(cls) == reference_tables.LAST_RULES[cls.value]


def test_canonicalize_boundary_rule():
    assert canonicalize_boundary_rule(105, 'first') == 9
    assert canonicalize_boundary_rule(75, 'last') == 65
    assert canonicalize_boundary_rule(9, 'first') == 9
    with pytest.raises(ValueError):
        canonicalize_boundary_rule(9, 'middle')


def test_derived_tables_match_printed_tables():
    rows = compare_tables()
    assert rows
    assert [r for r in rows if not r.matches] == []
    assert_tables_match()


def test_mismatch_is_reported_by_name(monkeypatch):
    monkeypatch.setitem(reference_tables.LAST_RULES, 'IV', {20})
    monkeypatch.setitem(reference_tables.FIRST_RULES, 3, 'II')
    with pytest.raises(TableMismatchError) as info:
        assert_tables_match()
    found = {(m.table, m.row) for m in info.value.mismatches}
    assert found == {('last-rules', 'IV'), ('first-rules', '3')}
    assert 'last-rules row IV' in str(info.value)
