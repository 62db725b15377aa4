from __future__ import annotations

import random

import pytest
from hypothesis import given, settings, strategies as st

from lexshell.corpus import random_bounded_poset
from lexshell.errors import IncompleteLabelingError, ParseError
from lexshell.labeling import (
    STRICT,
    WEAK,
    format_chain_labeling,
    format_labeling,
    lift,
    parse_chain_labeling,
    parse_labeling,
    search_el_labeling,
    verify_cl_labeling,
    verify_el_labeling,
)
from lexshell.shelling import lex_order_shelling_check

from conftest import standard_labels
from oracles import naive_el, naive_el_labelings

B2_GOOD = {("bot", "1"): 1, ("bot", "2"): 2, ("1", "12"): 2, ("2", "12"): 1}
PENT_LABELS = {("bot", "a"): 1, ("a", "m"): 2, ("m", "top"): 3, ("bot", "b"): 2, ("b", "top"): 1}


def test_b2(b2):
    assert verify_el_labeling(b2, B2_GOOD)
    res = verify_el_labeling(b2, {e: 1 for e in b2.covers})
    assert not res and res.interval == ("bot", "12")


def test_two_chain(chain2):
    assert verify_el_labeling(chain2, {("bot", "top"): 7})
    assert verify_cl_labeling(chain2, {("bot", "top"): 7})


def test_b3_standard(b3):
    assert verify_el_labeling(b3, standard_labels(b3))
    assert verify_el_labeling(b3, standard_labels(b3), STRICT)


def test_modes_differ():
    # 3-chain labelled 1, 1: weakly but not strictly increasing
    from lexshell import build_poset

    p = build_poset([("bot", "m"), ("m", "top")])
    labels = {("bot", "m"): 1, ("m", "top"): 1}
    assert verify_el_labeling(p, labels, WEAK)
    assert not verify_el_labeling(p, labels, STRICT)


def test_incomplete(b2):
    with pytest.raises(IncompleteLabelingError):
        verify_el_labeling(b2, {("bot", "1"): 1})


def test_pentagon_cl_of_lift(pent):
    cl = lift(pent, PENT_LABELS)
    assert verify_cl_labeling(pent, cl)
    assert verify_el_labeling(pent, PENT_LABELS, STRICT)


def test_cl_can_depend_on_root(b3):
    cl = lift(b3, standard_labels(b3))
    # relabel one rooted edge so that the increasing chain of [1, 123] differs by root
    assert verify_cl_labeling(b3, cl)
    bad = dict(cl)
    bad[("bot", "1", "12")] = 5
    res = verify_cl_labeling(b3, bad)
    assert not res and res.root is not None


def test_search_b2(b2):
    found = search_el_labeling(b2, 2)
    assert found == B2_GOOD | {("bot", "2"): 2, ("2", "12"): 1, ("1", "12"): 1}
    assert verify_el_labeling(b2, found)
    assert found in list(naive_el_labelings(b2, 2))


def test_search_pentagon(pent):
    found = search_el_labeling(pent, 3)
    assert found is not None and naive_el(pent, found)
    assert search_el_labeling(pent, 1) is None


def test_search_two_chain(chain2):
    assert search_el_labeling(chain2, 1) == {("bot", "top"): 1}


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**9))
def test_search_matches_brute_force(seed):
    p = random_bounded_poset(random.Random(seed), max_size=6)
    if len(p.covers) > 8:
        return
    brute = list(naive_el_labelings(p, 2))
    found = search_el_labeling(p, 2)
    assert (found is not None) == bool(brute)
    if found is not None:
        assert naive_el(p, found)
        # lexicographic chain order is a shelling, and the EL labeling lifts to CL
        assert lex_order_shelling_check(p, found)
        assert verify_cl_labeling(p, lift(p, found), WEAK)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**9))
def test_verify_el_matches_naive(seed):
    rng = random.Random(seed)
    p = random_bounded_poset(rng, max_size=7)
    labels = {e: rng.randint(1, 3) for e in sorted(p.covers)}
    for mode, weak in ((WEAK, True), (STRICT, False)):
        assert bool(verify_el_labeling(p, labels, mode)) == naive_el(p, labels, weak)
        assert bool(verify_cl_labeling(p, lift(p, labels), mode)) == naive_el(p, labels, weak)


def test_file_formats(pent):
    text = format_labeling(PENT_LABELS)
    assert parse_labeling(text) == PENT_LABELS
    cl = lift(pent, PENT_LABELS)
    text = format_chain_labeling(cl)
    assert parse_chain_labeling(text) == cl
    assert format_chain_labeling(parse_chain_labeling(text)) == text
    with pytest.raises(ParseError):
        parse_chain_labeling("bot>a : 1\nbot>a : 2\n")
    with pytest.raises(ParseError):
        parse_labeling("bot a x\n")
    assert parse_chain_labeling("bot>a : 1\nbot>a : 1\n") == {("bot", "a"): 1}
