"""Ready-made fixtures: the pentagon, the four-copy graded example and its
hand-built atom orderings, and the bundled ungraded example.

Element names in the graded example are ``<face>_<i>`` for a face of the
input complex and a copy index ``i`` in ``abcd``, plus the reserved names
``bot``, ``x``, ``bot_a`` .. ``bot_d``, the shared facet ``134`` and ``top``.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from importlib import resources
from itertools import combinations
from pathlib import Path

from .errors import RecipeInapplicableError, ValidationError
from .poset import Poset, atoms, build_poset, read_poset
from .rao import RaoNode, forced_first_set
from .shelling import find_shelling, forced_last_facet
from .simplicial import BOTTOM, TOP, Face, SimplicialComplex, face_name, make_face, read_complex

INDICES = "abcd"
SPECIAL = ("1", "3", "4")
X = "x"


def _data(name: str) -> Path:
    return Path(str(resources.files("lexshell") / "data" / name))


def pentagon() -> Poset:
    """Chains bot < a < m < top and bot < b < top."""
    return build_poset([("bot", "a"), ("a", "m"), ("m", "top"), ("bot", "b"), ("b", "top")])


# -- the input complex ----------------------------------------------------


def validate_hachimori(c: SimplicialComplex, limit: int | None = None) -> SimplicialComplex:
    special = make_face(SPECIAL)
    if not c.is_pure or c.dim != 2:
        raise ValidationError("pure-2-dimensional", f"facet sizes {sorted({len(f) for f in c.facets})}")
    if special not in c.facets:
        raise ValidationError("contains-134", "no facet with vertices 1, 3, 4")
    if find_shelling(c, limit=limit) is None:
        raise ValidationError("shellable", "find_shelling found no shelling")
    if not forced_last_facet(c, special, limit=limit):
        raise ValidationError("134-forced-last", "some shelling does not end with 134")
    return c


def load_hachimori(path: str | Path | None = None, limit: int | None = None) -> SimplicialComplex:
    """Read a complex (the bundled one by default) and check that it is pure,
    two-dimensional, shellable and has 134 last in every shelling."""
    return validate_hachimori(read_complex(path or _data("hachimori.cplx")), limit)


# -- the graded example ---------------------------------------------------


def _name(face: Face, i: str) -> str:
    return face_name(face) if face == make_face(SPECIAL) else f"{face_name(face)}_{i}"


def copy_index(element: str) -> str | None:
    """The copy letter of an element, or ``None`` for the shared ones."""
    head, sep, tail = element.rpartition("_")
    if sep and head and tail in INDICES:
        return tail
    return None


def _adjacent(i: str, j: str) -> bool:
    return abs(INDICES.index(i) - INDICES.index(j)) <= 1


def build_graded_example(h: SimplicialComplex) -> Poset:
    """Glue four copies of the dual face lattice of ``h``.

    The copies share 134 and the top; a new bottom sits below ``x`` and the
    four copy bottoms, ``x`` sits below every facet copy, and a face copy
    ``y_i`` covers ``z_j`` whenever ``y`` is a codimension-one face of ``z``
    and ``i``, ``j`` are equal or adjacent letters.
    """
    special = make_face(SPECIAL)
    if special not in h.facets:
        raise ValidationError("contains-134", "no facet with vertices 1, 3, 4")
    covers: set[tuple[str, str]] = {(BOTTOM, X)}
    for i in INDICES:
        covers.add((BOTTOM, f"{BOTTOM}_{i}"))
        for f in h.facets:
            covers.add((f"{BOTTOM}_{i}", _name(f, i)))
            covers.add((X, _name(f, i)))
    for z in h.faces():
        for y in combinations(z, len(z) - 1):
            if not y:
                continue
            for i in INDICES:
                for j in INDICES:
                    if _adjacent(i, j):
                        covers.add((_name(z, j), _name(y, i)))
        if len(z) == 1:
            for i in INDICES:
                covers.add((_name(z, i), TOP))
    return build_poset(sorted(covers))


def expected_size(h: SimplicialComplex) -> int:
    """Four copies of every nonempty face except 134, plus 134, top, bot, x
    and the four copy bottoms."""
    return 4 * (len(h.faces()) - 1) + 8


# -- the hand-built recursive atom ordering ---------------------------------


def _canon(elems: Iterable[str]) -> list[str]:
    return sorted(elems)


def _by_index(elems: Iterable[str], i: str | None) -> list[str]:
    return _canon(e for e in elems if copy_index(e) == i)


def _shifted(i: str, step: int) -> str | None:
    k = INDICES.index(i) + step
    return INDICES[k] if 0 <= k < len(INDICES) else None


def _concat(blocks: Sequence[list[str]], ups: list[str], where: str) -> tuple[str, ...]:
    seen: list[str] = []
    for block in blocks:
        seen.extend(a for a in block if a not in seen)
    if sorted(seen) != sorted(ups):
        raise RecipeInapplicableError(f"recipe at {where} does not list every atom exactly once")
    return tuple(seen)


def _facet_order(
    p: Poset, elem: str, root: str, prior: set[str]
) -> tuple[str, ...]:
    """Order the atoms of a facet copy (or of 134) for a given root context.

    ``root`` is ``"x"`` or a copy letter; ``prior`` holds the atoms that
    cover an earlier sibling.
    """
    ups = p.upper_covers(elem)
    early = [a for a in ups if a in prior]
    late = [a for a in ups if a not in prior]
    if elem == face_name(SPECIAL) and root == X:
        # shared edges copy by copy, then the remaining ones
        blocks = [_by_index(early, i) for i in INDICES] + [_by_index(late, i) for i in INDICES]
        return _concat(blocks, ups, elem)
    i = copy_index(elem) if root == X else root
    if i is None:
        raise RecipeInapplicableError(f"no copy index for {elem!r}")
    if root != X:
        near = [j for j in (_shifted(i, -1), _shifted(i, 1)) if j]
        blocks = [
            _by_index(early, i),
            _canon(a for a in early if copy_index(a) in near),
            _by_index(late, i),
            _canon(ups),
        ]
    elif i == "a":
        blocks = [_by_index(early, "a"), _by_index(early, "b"),
                  _by_index(late, "a"), _by_index(late, "b")]
    else:
        nxt = _shifted(i, 1)
        blocks = [
            _by_index(early, _shifted(i, -1)),
            _by_index(early, i),
            _by_index(early, nxt) if nxt else [],
            _by_index(late, nxt) if nxt else [],
            _canon(ups),
        ]
    return _concat(blocks, ups, elem)


def build_graded_rao(p: Poset, shelling: Sequence[Iterable[str]]) -> RaoNode:
    """Certificate for the graded example assembled from the block recipes.

    The bottom orders ``x`` before the copy bottoms; ``x`` takes the facet
    copies facet by facet in shelling order, one copy per letter, with 134
    last; each copy bottom takes the shelling order. Facet nodes use the
    recipe selected by their root context; everything higher puts the
    atoms forced by earlier siblings first and the rest canonically.
    """
    facets = [make_face(f) for f in shelling]
    special = make_face(SPECIAL)
    if not facets or facets[-1] != special:
        raise RecipeInapplicableError("the shelling must end with 134")
    for name in [BOTTOM, X, TOP, face_name(special)] + [f"{BOTTOM}_{i}" for i in INDICES]:
        if name not in p:
            raise RecipeInapplicableError(f"poset has no element {name!r}")
    x_order = tuple(_name(f, i) for f in facets[:-1] for i in INDICES) + (face_name(special),)
    if sorted(x_order) != sorted(p.upper_covers(X)):
        raise RecipeInapplicableError("atoms of x are not the facet copies of the shelling")
    copy_orders = {}
    for i in INDICES:
        order = tuple(_name(f, i) for f in facets)
        if sorted(order) != sorted(p.upper_covers(f"{BOTTOM}_{i}")):
            raise RecipeInapplicableError(f"atoms of bot_{i} are not the facets of the shelling")
        copy_orders[i] = order

    top = p.top
    memo: dict[tuple[str, str, frozenset[str]], RaoNode] = {}

    def node(u: str, root: str, forced: frozenset[str], facet_level: bool) -> RaoNode:
        key = (u, root if facet_level else "", forced)
        if key in memo:
            return memo[key]
        ups = p.upper_covers(u)
        if ups == [top]:
            made = RaoNode(u)
        else:
            if facet_level:
                order = _facet_order(p, u, root, set(forced))
            else:
                order = tuple(_canon(forced)) + tuple(_canon(a for a in ups if a not in forced))
            made = RaoNode(u, order, {})
            for j, a in enumerate(order):
                made.children[a] = node(a, root, frozenset(forced_first_set(p, a, order[:j])), False)
        memo[key] = made
        return made

    def branch(parent: str, order: tuple[str, ...], root: str) -> RaoNode:
        kids = {}
        for j, a in enumerate(order):
            kids[a] = node(a, root, frozenset(forced_first_set(p, a, order[:j])), True)
        return RaoNode(parent, order, kids)

    root_order = (X,) + tuple(f"{BOTTOM}_{i}" for i in INDICES)
    children = {X: branch(X, x_order, X)}
    for i in INDICES:
        children[f"{BOTTOM}_{i}"] = branch(f"{BOTTOM}_{i}", copy_orders[i], i)
    return RaoNode(p.bottom, root_order, children)


def copy_context(p: Poset, i: str) -> list[str]:
    """Earlier siblings of 134 below ``bot_i`` when 134 comes last there."""
    return [a for a in atoms(p, f"{BOTTOM}_{i}") if a != face_name(SPECIAL)]


# -- the ungraded example -------------------------------------------------


def validate_ungraded(p: Poset) -> Poset:
    if not p.is_bounded:
        raise ValidationError("bounded", "needs a unique minimum and maximum")
    if p.rank() is not None:
        raise ValidationError("ungraded", "all maximal chains have the same length")
    bot = p.bottom
    want = {X} | {f"a{k}" for k in range(1, 7)}
    if not want <= set(atoms(p, bot)):
        raise ValidationError("atoms", f"atoms of {bot} must include x and a1..a6")
    for k in range(1, 7):
        ups = p.upper_covers(f"a{k}")
        if len(ups) != 2 or not all(X in p.lower_covers(u) for u in ups):
            raise ValidationError("a-covers", f"a{k} must be covered by exactly two elements, both covering x")
    if "y" not in p or set(p.upper_covers("y")) != {f"d{k}" for k in range(1, 7)}:
        raise ValidationError("y-atoms", "y must have atoms d1..d6")
    for e in p.elements:
        if p.height(e) >= 2 and not p.leq(X, e):
            raise ValidationError("above-x", f"{e} has height >= 2 but is not above x")
    for k in range(1, 7):
        ups = p.upper_covers(f"a{k}")
        if "y" not in ups:
            raise ValidationError("y-over-a", f"y does not cover a{k}")
        other = next(u for u in ups if u != "y")
        if not any(p.leq(other, f"d{m}") for m in range(1, 7)):
            raise ValidationError("y-over-a", f"no atom of y lies above {other}")
    return p


def load_ungraded_example(path: str | Path | None = None) -> Poset:
    """Read the bundled ungraded example (or ``path``) and check its shape."""
    return validate_ungraded(read_poset(path or _data("ungraded_fig1.poset")))

