from __future__ import annotations

import pytest

from lexshell import build_complex, dual_face_lattice, order_complex
from lexshell.errors import EmptyInputError, EmptyPosetError, ParseError, RedundantFacetError
from lexshell.simplicial import format_facets, parse_complex


def test_build_complex(triangle_boundary):
    assert triangle_boundary.dim == 1
    assert build_complex([("1", "2", "3")]).dim == 2
    with pytest.raises(RedundantFacetError):
        build_complex([("1", "2"), ("1", "2", "3")])
    with pytest.raises(EmptyInputError):
        build_complex([])


def test_order_complex_of_b3(b3):
    full = order_complex(b3)
    proper = order_complex(b3, strip_bounds=True)
    assert len(full.facets) == len(proper.facets) == 6
    assert all(len(f) == 2 for f in proper.facets)
    assert len(proper.vertices) == 6


def test_order_complex_of_b2(b2):
    assert order_complex(b2, strip_bounds=True).facets == (("1",), ("2",))


def test_order_complex_empty_proper_part(chain2):
    with pytest.raises(EmptyPosetError):
        order_complex(chain2, strip_bounds=True)


def test_order_complex_facets_are_chains(pent):
    proper = order_complex(pent, strip_bounds=True)
    assert proper.facets == (("a", "m"), ("b",))
    assert not proper.is_pure


def test_dual_face_lattice_triangle():
    p = dual_face_lattice(build_complex([("1", "2", "3")]))
    assert p.rank() == 4
    assert p.upper_covers("bot") == ["123"]
    assert p.upper_covers("123") == ["12", "13", "23"]
    assert p.lower_covers("top") == ["1", "2", "3"]


def test_dual_face_lattice_edge():
    p = dual_face_lattice(build_complex([("1", "2")]))
    assert p.maximal_chains() == [("bot", "12", "1", "top"), ("bot", "12", "2", "top")]


def test_dual_face_lattice_of_hachimori(hachimori):
    p = dual_face_lattice(hachimori)
    from lexshell.simplicial import face_name

    assert set(p.upper_covers("bot")) == {face_name(f) for f in hachimori.facets}
    assert p.rank() == 4
    # above a facet sits a Boolean lattice
    sub = p.interval("134", "top")
    assert len(sub) == 8 and len(sub.maximal_chains()) == 6


def test_graded_iff_pure():
    pure = build_complex([("1", "2"), ("2", "3")])
    mixed = build_complex([("1", "2", "3"), ("3", "4")])
    assert dual_face_lattice(pure).rank() == 3
    assert dual_face_lattice(mixed).rank() is None


def test_file_roundtrip(hachimori):
    text = format_facets(hachimori.facets)
    assert parse_complex(text) == hachimori
    with pytest.raises(ParseError):
        parse_complex("1 2\n1 2\n")
    with pytest.raises(ParseError):
        parse_complex("1 1 2\n")
