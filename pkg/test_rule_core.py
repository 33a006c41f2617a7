import pytest
from hypothesis import given
from hypothesis import strategies as st

import reference_tables
from errors import OddMaskError, RuleRangeError
from rule_core import (LINEAR_ADDITIVE_RULES, balanced_irreversible_rules, complement_rule,
                       effective_rmts, equivalent_rmt, is_balanced, is_balanced_on,
                       is_linear_additive, is_reversible_rule, next_rmts, parse_rule,
                       reversible_rules, rmt_index, rmt_neighborhood, rmt_value, rule_bits,
                       sibling_rmt, validate_rule)

rules = st.integers(min_value=0, max_value=255)
rmts = st.integers(min_value=0, max_value=7)


def test_rule_bits_of_90():
    assert rule_bits(90) == (0, 1, 0, 1, 1, 0, 1, 0)


def test_rmt_neighborhood():
    assert rmt_neighborhood(6) == (1, 1, 0)
    assert rmt_neighborhood(1) == (0, 0, 1)


@given(k=rmts)
def test_rmt_index_inverts_neighborhood(k):
    assert rmt_index(*rmt_neighborhood(k)) == k


@given(rule=rules, k=rmts)
def test_rmt_value_matches_rule_bits(rule, k):
    assert rmt_value(rule, k) == rule_bits(rule)[k]


def test_validate_rule():
    assert validate_rule(0) == 0
    assert validate_rule(255) == 255
    for bad in (-1, 256, 3.0, '90', True):
        with pytest.raises(RuleRangeError):
            validate_rule(bad)


def test_parse_rule():
    assert parse_rule(' 90 ') == 90
    with pytest.raises(RuleRangeError):
        parse_rule('ninety')
    with pytest.raises(RuleRangeError):
        parse_rule('300')


def test_next_rmts():
    assert next_rmts(0) == (0, 1)
    assert next_rmts(3) == (6, 7)
    assert next_rmts(5) == (2, 3)
    assert next_rmts(7) == (6, 7)


@given(k=rmts)
def test_equivalent_rmts_share_successors(k):
    assert next_rmts(k) == next_rmts(equivalent_rmt(k))
    assert next_rmts(k) == next_rmts((k + 4) % 8)


def test_sibling_rmt():
    assert sibling_rmt(6) == 7
    assert sibling_rmt(3) == 2


def test_balance():
    assert is_balanced(90)
    assert not is_balanced(0)
    assert not is_balanced(129)


def test_balance_on_mask():
    assert is_balanced_on(90, {0, 1, 2, 3})
    assert not is_balanced_on(15, {0, 1, 2, 3})
    assert is_balanced_on(5, {0, 2, 4, 6})


def test_balance_on_odd_mask_rejected():
    with pytest.raises(OddMaskError):
        is_balanced_on(90, {0, 1, 2})


def test_balance_on_mask_outside_range():
    with pytest.raises(RuleRangeError):
        is_balanced_on(90, {8, 9})


def test_effective_rmts():
    assert effective_rmts('first') == {0, 1, 2, 3}
    assert effective_rmts('last') == {0, 2, 4, 6}
    assert effective_rmts('single') == {0, 2}
    assert effective_rmts('interior') == set(range(8))
    with pytest.raises(ValueError):
        effective_rmts('middle')


def test_reversible_rules_match_published_list():
    assert len(reversible_rules()) == 62
    assert set(reversible_rules()) == reference_tables.REVERSIBLE_RULES


def test_balanced_irreversible_rules():
    assert set(balanced_irreversible_rules()) == reference_tables.BALANCED_IRREVERSIBLE_RULES
    # every balanced rule lands in exactly one of the two lists
    assert len(reversible_rules()) + len(balanced_irreversible_rules()) == 70


def test_linear_additive_rules_are_reversible():
    assert LINEAR_ADDITIVE_RULES <= set(reversible_rules())
    assert is_linear_additive(150)
    assert not is_linear_additive(30)


@given(rule=rules)
def test_complement_preserves_reversibility(rule):
    assert complement_rule(complement_rule(rule)) == rule
    assert is_reversible_rule(rule) == is_reversible_rule(complement_rule(rule))


@given(rule=rules)
def test_unbalanced_rules_are_never_reversible(rule):
    if not is_balanced(rule):
        assert not is_reversible_rule(rule)
