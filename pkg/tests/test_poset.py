from __future__ import annotations

import pytest
from hypothesis import given, settings, strategies as st

from lexshell import build_poset, dual, interval, is_graded, maximal_chains
from lexshell.corpus import random_bounded_poset
from lexshell.errors import (
    CycleError,
    NonCoverError,
    NotBoundedError,
    NotComparableError,
    ParseError,
    UnknownElementError,
)
from lexshell.poset import atoms, format_poset, parse_poset

from oracles import Naive


def test_pentagon_basics(pent):
    assert len(pent) == 5
    assert atoms(pent, "bot") == ["a", "b"]
    assert maximal_chains(pent) == [("bot", "a", "m", "top"), ("bot", "b", "top")]
    assert is_graded(pent) == (False, None)


def test_two_chain(chain2):
    assert len(chain2) == 2
    assert atoms(chain2, "bot") == ["top"]
    assert is_graded(chain2) == (True, 1)


def test_transitive_pair_rejected():
    with pytest.raises(NonCoverError):
        build_poset([("bot", "a"), ("a", "b"), ("bot", "b")])


def test_cycle_rejected():
    with pytest.raises(CycleError):
        build_poset([("a", "b"), ("b", "c"), ("c", "a")])
    with pytest.raises(CycleError):
        build_poset([("a", "a")])


def test_boundedness_is_lazy():
    p = build_poset([("a", "c"), ("b", "c")])
    assert not p.is_bounded
    with pytest.raises(NotBoundedError):
        p.maximal_chains()
    # the dual and intervals still work
    assert dual(p).maximal_elements() == ["a", "b"]
    assert len(p.interval("a", "c")) == 2


def test_interval(pent):
    assert interval(pent, "bot", "top") == pent
    sub = interval(pent, "a", "top")
    assert sub.maximal_chains() == [("a", "m", "top")]
    with pytest.raises(NotComparableError):
        interval(pent, "a", "b")


def test_unknown_element(pent):
    with pytest.raises(UnknownElementError):
        atoms(pent, "zz")


def test_boolean_lattices(b2, b3):
    assert len(b2.maximal_chains()) == 2
    assert len(b3.maximal_chains()) == 6
    assert is_graded(b3) == (True, 3)


def test_dual_involution(pent, b3):
    for p in (pent, b3):
        assert dual(dual(p)) == p
    d = dual(pent)
    assert d.bottom == "top"
    assert not is_graded(d)[0]


def test_atoms_are_dual_coatoms(b3):
    d = dual(b3)
    for e in b3.elements:
        assert atoms(b3, e) == d.lower_covers(e)


def test_graded_example_interval(graded_p):
    sub = interval(graded_p, "134", "top")
    assert sub.length() == 3
    assert len(atoms(sub, "134")) == 12
    assert sorted(atoms(graded_p, "134")) == sorted(
        f"{e}_{i}" for e in ("13", "14", "34") for i in "abcd"
    )


def test_file_roundtrip(pent):
    text = format_poset(pent, header=["pentagon"])
    assert parse_poset(text) == pent
    assert format_poset(parse_poset(text), header=["pentagon"]) == text


def test_parse_errors():
    with pytest.raises(ParseError):
        parse_poset("cover a b\ncover a b\n")
    with pytest.raises(ParseError):
        parse_poset("covers a b\n")
    with pytest.raises(ParseError):
        parse_poset("# nothing\n")
    p = parse_poset("  cover   a  b  # comment\nelem lonely\n")
    assert "lonely" in p and not p.is_bounded


def test_canonical_order_is_bytewise():
    p = build_poset([("bot", "Z"), ("bot", "a"), ("bot", "é"), ("Z", "top"), ("a", "top"), ("é", "top")])
    assert atoms(p, "bot") == sorted(["Z", "a", "é"], key=lambda s: s.encode())


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**6))
def test_covers_rederived_from_order(seed):
    import random

    p = random_bounded_poset(random.Random(seed))
    n = Naive(p)
    rederived = {
        (a, b) for (a, b) in n.leq
        if a != b and not any((a, c) in n.leq and (c, b) in n.leq and c not in (a, b) for c in n.elements)
    }
    assert rederived == set(p.covers)
    assert len(interval(p, p.bottom, p.top).maximal_chains()) == len(p.maximal_chains())
    rank = p.rank()
    lengths = {len(c) - 1 for c in n.chains(n.bottom, n.top)}
    assert (rank is not None) == (len(lengths) == 1)
    if rank is not None:
        assert lengths == {rank}
    assert sorted(p.maximal_chains()) == sorted(n.chains(n.bottom, n.top))
