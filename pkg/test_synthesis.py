import random
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from classes import (canonicalize_boundary_rule, class_of_first_rule, last_rule_options,
                     next_class, rules_of_class)
from errors import CaError, CellCountError
from oracle import build_stg, is_bijective
from reachability import identify_reversible
from rule_core import reversible_rules
from synthesis import (FIRST_RULES, SynthesisRequest, count_reversible, new_seed, synthesize,
                       synthesize_classwalk, synthesize_tree)

seeds = st.integers(min_value=0, max_value=2 ** 32 - 1)


class ScriptedChooser:
    """Replays a fixed sequence of choices"""

    def __init__(self, script):
        self._script = iter(script)

    def choice(self, options):
        value = next(self._script)
        assert value in options, f"{value} not among {options}"
        return value

    def getrandbits(self, k):
        return 0


def follows_class_tables(rules):
    cls = class_of_first_rule(rules[0])
    for rule in rules[1:-1]:
        if rule not in rules_of_class(cls):
            return False
        cls = next_class(cls, rule)
    return canonicalize_boundary_rule(rules[-1], 'last') in last_rule_options(cls)


def test_tree_replays_worked_example():
    rv = synthesize_tree(4, ScriptedChooser([9, 15, 85, 5]))
    assert rv.rules == (9, 15, 85, 5)
    assert identify_reversible(rv).reversible
    assert identify_reversible([90, 15, 85, 15]).reversible


def test_classwalk_replays_worked_example():
    rv = synthesize_classwalk(4, ScriptedChooser([9, 177, 170, 65]))
    assert rv.rules == (9, 177, 170, 65)
    assert identify_reversible(rv).reversible


def test_classwalk_rejects_off_table_choice():
    # 60 is reversible but not in class III, the class that follows rule 9
    with pytest.raises(AssertionError):
        synthesize_classwalk(4, ScriptedChooser([9, 60, 170, 65]))


@settings(deadline=None)
@given(n=st.integers(1, 60), seed=seeds)
def test_tree_output_is_reversible(n, seed):
    rv = synthesize(n, seed, 'tree')
    assert rv.n == n
    assert identify_reversible(rv).reversible
    if n >= 2:
        assert follows_class_tables(rv.rules)


@settings(deadline=None)
@given(n=st.integers(2, 60), seed=seeds)
def test_classwalk_output_is_reversible(n, seed):
    rv = synthesize(n, seed, 'classwalk')
    assert identify_reversible(rv).reversible
    assert set(rv.rules[1:-1]) <= set(reversible_rules())
    assert rv.rules[0] in FIRST_RULES


@settings(deadline=None, max_examples=50)
@given(n=st.integers(1, 12), seed=seeds, method=st.sampled_from(['tree', 'classwalk']))
def test_synthesized_vectors_pass_the_oracle(n, seed, method):
    if method == 'classwalk' and n < 2:
        return
    assert is_bijective(build_stg(synthesize(n, seed, method)))


@settings(deadline=None)
@given(n=st.integers(2, 30), seed=seeds, method=st.sampled_from(['tree', 'classwalk']))
def test_same_seed_same_vector(n, seed, method):
    assert synthesize(n, seed, method) == synthesize(n, seed, method)


@settings(deadline=None)
@given(n=st.integers(2, 30), seed=seeds)
def test_randomized_dontcares_keep_reversibility(n, seed):
    rv = synthesize(n, seed, 'tree', randomize_dontcares=True)
    assert identify_reversible(rv).reversible
    assert canonicalize_boundary_rule(rv[0], 'first') in FIRST_RULES


def test_randomized_dontcares_reach_upper_bits():
    firsts = {synthesize(3, seed, 'classwalk', randomize_dontcares=True)[0] for seed in range(40)}
    assert any(rule > 15 for rule in firsts)


def test_single_cell_tree():
    for seed in range(10):
        assert synthesize(1, seed, 'tree').rules in {(1,), (4,)}


def test_request_validation():
    with pytest.raises(CaError):
        SynthesisRequest(4, 0, 'genetic')
    with pytest.raises(CellCountError):
        SynthesisRequest(0, 0, 'tree')
    with pytest.raises(CellCountError):
        synthesize(1, 0, 'classwalk')


def test_new_seed_is_an_int():
    seed = new_seed()
    assert isinstance(seed, int)
    assert 0 <= seed < 2 ** 32


def test_generated_seed_when_omitted():
    assert identify_reversible(synthesize(6)).reversible


def test_seeded_rng_is_what_drives_choices():
    rv = synthesize_tree(8, random.Random(11))
    assert rv == synthesize(8, 11, 'tree')


def test_count_single_cell():
    assert count_reversible(1, canonical=True) == 8
    assert count_reversible(1) == 128


def test_count_two_cells_matches_direct_identification():
    direct = sum(identify_reversible((a, b)).reversible for a, b in product(range(256), repeat=2))
    assert count_reversible(2) == direct


def test_count_over_reversible_rules_is_strictly_smaller():
    assert 0 < count_reversible(3, 'reversible') < 62 ** 3


def test_count_bounds():
    with pytest.raises(CellCountError):
        count_reversible(0)
    with pytest.raises(CellCountError):
        count_reversible(5)
    with pytest.raises(CaError):
        count_reversible(2, 'even')


@pytest.mark.slow
@pytest.mark.parametrize('method', ['tree', 'classwalk'])
@pytest.mark.parametrize('n', range(3, 13))
def test_every_seeded_output_is_bijective(method, n):
    failures = [seed for seed in range(10000)
                if not is_bijective(build_stg(synthesize(n, seed, method)))]
    assert failures == []
