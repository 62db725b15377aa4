"""Abstract simplicial complexes, order complexes and dual face lattices."""

from __future__ import annotations

from collections.abc import Iterable
from itertools import combinations
from pathlib import Path

from .errors import EmptyInputError, EmptyPosetError, ParseError, RedundantFacetError
from .poset import Poset

Face = tuple[str, ...]

BOTTOM = "bot"
TOP = "top"


def make_face(vertices: Iterable[str]) -> Face:
    return tuple(sorted(set(str(v) for v in vertices)))


def face_name(face: Iterable[str]) -> str:
    """Render a face as a single token: ``134`` for one-character vertices,
    ``v1,v2`` otherwise."""
    face = make_face(face)
    if all(len(v) == 1 for v in face):
        return "".join(face)
    return ",".join(face)


class SimplicialComplex:
    """A finite abstract simplicial complex given by its facets.

    Facets are stored as sorted vertex tuples in canonical order.
    """

    def __init__(self, facets: Iterable[Iterable[str]]):
        fs = sorted({make_face(f) for f in facets})
        if not fs:
            raise EmptyInputError("a complex needs at least one facet")
        sets = [frozenset(f) for f in fs]
        for i, a in enumerate(sets):
            for j, b in enumerate(sets):
                if i != j and a < b:
                    raise RedundantFacetError(
                        f"facet {face_name(fs[i])} is contained in {face_name(fs[j])}"
                    )
        self.facets: tuple[Face, ...] = tuple(fs)
        self.vertices: tuple[str, ...] = tuple(sorted({v for f in fs for v in f}))

    def __repr__(self) -> str:
        return f"SimplicialComplex({[face_name(f) for f in self.facets]})"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, SimplicialComplex) and self.facets == other.facets

    def __hash__(self) -> int:
        return hash(self.facets)

    @property
    def dim(self) -> int:
        return max(len(f) for f in self.facets) - 1

    @property
    def is_pure(self) -> bool:
        return len({len(f) for f in self.facets}) == 1

    def has_facet(self, face: Iterable[str]) -> bool:
        return make_face(face) in self.facets

    def faces(self) -> list[Face]:
        """All nonempty faces, canonical order."""
        out: set[Face] = set()
        for f in self.facets:
            for k in range(1, len(f) + 1):
                out.update(combinations(f, k))
        return sorted(out)


def build_complex(facets: Iterable[Iterable[str]]) -> SimplicialComplex:
    return SimplicialComplex(facets)


def order_complex(p: Poset, strip_bounds: bool = False) -> SimplicialComplex:
    """Order complex of ``p``; with ``strip_bounds`` that of its proper part."""
    q = p.proper_part() if strip_bounds else p
    if len(q) == 0:
        raise EmptyPosetError("order complex of an empty poset")
    return SimplicialComplex(q.all_maximal_chains())


def dual_face_lattice(c: SimplicialComplex) -> Poset:
    """Face lattice of ``c`` turned upside down.

    ``bot`` stands for the whole complex, its atoms are the facets, larger
    ranks hold smaller faces, and ``top`` is the empty face.
    """
    covers = [(BOTTOM, face_name(f)) for f in c.facets]
    for face in c.faces():
        name = face_name(face)
        if len(face) == 1:
            covers.append((name, TOP))
            continue
        for sub in combinations(face, len(face) - 1):
            covers.append((name, face_name(sub)))
    return Poset.from_covers(covers)


# -- .cplx files -------------------------------------------------------


def parse_facet_list(text: str) -> list[Face]:
    """Facets in file order (used both for complexes and for shelling orders)."""
    out: list[Face] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        face = make_face(line.split())
        if len(face) != len(line.split()):
            raise ParseError(f"line {lineno}: repeated vertex in {line!r}")
        out.append(face)
    return out


def parse_complex(text: str) -> SimplicialComplex:
    facets = parse_facet_list(text)
    if len(set(facets)) != len(facets):
        raise ParseError("duplicate facet line")
    return build_complex(facets)


def format_facets(facets: Iterable[Face], header: Iterable[str] = ()) -> str:
    lines = [f"# {h}" for h in header]
    lines += [" ".join(f) for f in facets]
    return "\n".join(lines) + "\n"


def read_complex(path: str | Path) -> SimplicialComplex:
    return parse_complex(Path(path).read_text(encoding="utf-8"))
