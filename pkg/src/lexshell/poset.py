"""Finite posets stored as Hasse diagrams.

Elements are opaque string tokens. Everything that enumerates (atoms, chains,
intervals) walks elements in canonical order, which is plain ``str`` ordering
(identical to bytewise order of the UTF-8 encoding).
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Sequence
from pathlib import Path

from .errors import (
    CycleError,
    NonCoverError,
    NotBoundedError,
    NotComparableError,
    ParseError,
    UnknownElementError,
)

Chain = tuple[str, ...]


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Poset:
    """An immutable finite poset given by its cover relation.

    Use :func:`build_poset` (or :meth:`from_covers`) to construct one; the
    constructor validates acyclicity and that every listed pair is a genuine
    cover. Boundedness is checked lazily by the operations that need it.
    """

    def __init__(self, elements: Iterable[str], covers: Iterable[tuple[str, str]]):
        elems = sorted(set(elements))
        cover_set = frozenset((str(u), str(v)) for u, v in covers)
        index = {e: i for i, e in enumerate(elems)}
        for u, v in cover_set:
            for e in (u, v):
                if e not in index:
                    raise UnknownElementError(f"cover mentions undeclared element {e!r}")
            if u == v:
                raise CycleError(f"self-loop on {u!r}")
        n = len(elems)
        up: list[list[int]] = [[] for _ in range(n)]
        down: list[list[int]] = [[] for _ in range(n)]
        for u, v in cover_set:
            up[index[u]].append(index[v])
            down[index[v]].append(index[u])
        for lst in up + down:
            lst.sort()

        # Kahn's algorithm; the resulting order is a linear extension.
        indeg = [len(d) for d in down]
        ready = [i for i in range(n) if indeg[i] == 0]
        topo: list[int] = []
        while ready:
            ready.sort(reverse=True)
            i = ready.pop()
            topo.append(i)
            for j in up[i]:
                indeg[j] -= 1
                if indeg[j] == 0:
                    ready.append(j)
        if len(topo) != n:
            stuck = sorted(elems[i] for i in range(n) if indeg[i] > 0)
            raise CycleError(f"cover relation has a cycle through {stuck[:5]}")

        above = [1 << i for i in range(n)]
        for i in reversed(topo):
            for j in up[i]:
                above[i] |= above[j]
        below = [1 << i for i in range(n)]
        for i in topo:
            for j in down[i]:
                below[i] |= below[j]

        for u, v in sorted(cover_set):
            iu, iv = index[u], index[v]
            for w in up[iu]:
                if w != iv and above[w] >> iv & 1:
                    raise NonCoverError(
                        f"({u}, {v}) is implied by the path through {elems[w]!r}"
                    )

        height = [0] * n
        for i in topo:
            for j in up[i]:
                height[j] = max(height[j], height[i] + 1)

        self.elements: tuple[str, ...] = tuple(elems)
        self.covers: frozenset[tuple[str, str]] = cover_set
        self._index = index
        self._up = [tuple(x) for x in up]
        self._down = [tuple(x) for x in down]
        self._above = above
        self._below = below
        self._topo = tuple(topo)
        self._height = height

    @classmethod
    def from_covers(
        cls, covers: Iterable[tuple[str, str]], elements: Iterable[str] = ()
    ) -> "Poset":
        covers = list(covers)
        elems = set(elements)
        for u, v in covers:
            elems.add(u)
            elems.add(v)
        return cls(elems, covers)

    # -- basic queries -------------------------------------------------

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, e: object) -> bool:
        return e in self._index

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Poset):
            return NotImplemented
        return self.elements == other.elements and self.covers == other.covers

    def __hash__(self) -> int:
        return hash((self.elements, self.covers))

    def __repr__(self) -> str:
        return f"Poset({len(self.elements)} elements, {len(self.covers)} covers)"

    def index(self, e: str) -> int:
        try:
            return self._index[e]
        except KeyError:
            raise UnknownElementError(f"unknown element {e!r}") from None

    def leq(self, u: str, v: str) -> bool:
        return bool(self._above[self.index(u)] >> self.index(v) & 1)

    def less(self, u: str, v: str) -> bool:
        return u != v and self.leq(u, v)

    def upper_covers(self, e: str) -> list[str]:
        return [self.elements[j] for j in self._up[self.index(e)]]

    def lower_covers(self, e: str) -> list[str]:
        return [self.elements[j] for j in self._down[self.index(e)]]

    def up_set(self, e: str) -> list[str]:
        """Elements ``>= e``, canonical order."""
        return [self.elements[j] for j in _bits(self._above[self.index(e)])]

    def down_set(self, e: str) -> list[str]:
        return [self.elements[j] for j in _bits(self._below[self.index(e)])]

    def height(self, e: str) -> int:
        """Length of the longest chain from a minimal element up to ``e``."""
        return self._height[self.index(e)]

    def linear_extension(self) -> list[str]:
        return [self.elements[i] for i in self._topo]

    def minimal_elements(self) -> list[str]:
        return [e for i, e in enumerate(self.elements) if not self._down[i]]

    def maximal_elements(self) -> list[str]:
        return [e for i, e in enumerate(self.elements) if not self._up[i]]

    @property
    def is_bounded(self) -> bool:
        return len(self.minimal_elements()) == 1 and len(self.maximal_elements()) == 1

    @property
    def bottom(self) -> str:
        mins = self.minimal_elements()
        if len(mins) != 1:
            raise NotBoundedError(f"poset has {len(mins)} minimal elements")
        return mins[0]

    @property
    def top(self) -> str:
        maxs = self.maximal_elements()
        if len(maxs) != 1:
            raise NotBoundedError(f"poset has {len(maxs)} maximal elements")
        return maxs[0]

    def require_bounded(self) -> None:
        self.bottom
        self.top

    # -- bitmask views used by the search engines -----------------------

    def mask(self, elems: Iterable[str]) -> int:
        m = 0
        for e in elems:
            m |= 1 << self.index(e)
        return m

    def unmask(self, mask: int) -> list[str]:
        return [self.elements[i] for i in _bits(mask)]

    # -- derived structures --------------------------------------------

    def interval(self, x: str, y: str) -> "Poset":
        """The closed interval ``[x, y]`` as a poset in its own right."""
        ix, iy = self.index(x), self.index(y)
        if not self._above[ix] >> iy & 1:
            raise NotComparableError(f"{x!r} is not below {y!r}")
        keep = self._above[ix] & self._below[iy]
        elems = [self.elements[i] for i in _bits(keep)]
        covers = [
            (self.elements[i], self.elements[j])
            for i in _bits(keep)
            for j in self._up[i]
            if keep >> j & 1
        ]
        return Poset(elems, covers)

    def subposet(self, elems: Iterable[str]) -> "Poset":
        """Induced subposet; covers are recomputed from the inherited order."""
        keep = self.mask(elems)
        kept = list(_bits(keep))
        covers = []
        for i in kept:
            strict = self._above[i] & keep & ~(1 << i)
            for j in _bits(strict):
                # j covers i inside the subposet iff nothing kept lies strictly between
                between = strict & self._below[j] & ~(1 << j)
                if not between:
                    covers.append((self.elements[i], self.elements[j]))
        return Poset([self.elements[i] for i in kept], covers)

    def proper_part(self) -> "Poset":
        """The poset with its bottom and top removed (may be empty or unbounded)."""
        bot, top = self.bottom, self.top
        return self.subposet(e for e in self.elements if e not in (bot, top))

    def dual(self) -> "Poset":
        return Poset(self.elements, ((v, u) for u, v in self.covers))

    def chains_between(self, x: str, y: str) -> list[Chain]:
        """All maximal chains of ``[x, y]`` in canonical order."""
        ix, iy = self.index(x), self.index(y)
        if not self._above[ix] >> iy & 1:
            raise NotComparableError(f"{x!r} is not below {y!r}")
        inside = self._below[iy]
        out: list[Chain] = []
        path = [ix]

        def walk(i: int) -> None:
            if i == iy:
                out.append(tuple(self.elements[k] for k in path))
                return
            for j in self._up[i]:
                if inside >> j & 1:
                    path.append(j)
                    walk(j)
                    path.pop()

        walk(ix)
        return out

    def all_maximal_chains(self) -> list[Chain]:
        """Maximal chains of an arbitrary (possibly unbounded) poset."""
        out: list[Chain] = []
        for m in self.minimal_elements():
            for t in self.maximal_elements():
                if self.leq(m, t):
                    out.extend(self.chains_between(m, t))
        out.sort()
        return out

    def maximal_chains(self) -> list[Chain]:
        return self.chains_between(self.bottom, self.top)

    def rank(self) -> int | None:
        """Common length of all maximal chains, or ``None`` when ungraded."""
        bot, top = self.bottom, self.top
        shortest = {self.index(bot): 0}
        for i in self._topo:
            if i not in shortest:
                continue
            for j in self._up[i]:
                d = shortest[i] + 1
                if j not in shortest or d < shortest[j]:
                    shortest[j] = d
        longest = self._height[self.index(top)] - self._height[self.index(bot)]
        return longest if shortest[self.index(top)] == longest else None

    def length(self, x: str | None = None) -> int:
        """Length of the longest chain in ``[x, top]`` (whole poset when ``x`` is None)."""
        top = self.index(self.top)
        start = self.index(self.bottom if x is None else x)
        best = {start: 0}
        for i in self._topo:
            if i in best:
                for j in self._up[i]:
                    best[j] = max(best.get(j, 0), best[i] + 1)
        return best[top]


# -- functional surface ------------------------------------------------


def build_poset(
    covers: Iterable[tuple[str, str]], elements: Iterable[str] = ()
) -> Poset:
    """Validate a cover list and return the poset it describes."""
    return Poset.from_covers(covers, elements)


def interval(p: Poset, x: str, y: str) -> Poset:
    return p.interval(x, y)


def atoms(p: Poset, x: str) -> list[str]:
    """Elements covering ``x`` (the atoms of ``[x, top]``), canonical order."""
    return p.upper_covers(x)


def maximal_chains(p: Poset) -> list[Chain]:
    return p.maximal_chains()


def is_graded(p: Poset) -> tuple[bool, int | None]:
    r = p.rank()
    return r is not None, r


def dual(p: Poset) -> Poset:
    return p.dual()


# -- .poset files ------------------------------------------------------


def parse_poset(text: str) -> Poset:
    covers: list[tuple[str, str]] = []
    seen: set[tuple[str, str]] = set()
    elems: list[str] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "cover" and len(parts) == 3:
            pair = (parts[1], parts[2])
            if pair in seen:
                raise ParseError(f"line {lineno}: duplicate cover {pair[0]} {pair[1]}")
            seen.add(pair)
            covers.append(pair)
        elif parts[0] == "elem" and len(parts) == 2:
            elems.append(parts[1])
        else:
            raise ParseError(f"line {lineno}: cannot parse {raw.strip()!r}")
    if not covers and not elems:
        raise ParseError("no elements")
    return build_poset(covers, elems)


def format_poset(p: Poset, header: Sequence[str] = ()) -> str:
    lines = [f"# {h}" for h in header]
    covered = set()
    for u, v in sorted(p.covers):
        covered.update((u, v))
    lines += [f"elem {e}" for e in p.elements if e not in covered]
    lines += [f"cover {u} {v}" for u, v in sorted(p.covers)]
    return "\n".join(lines) + "\n"


def read_poset(path: str | Path) -> Poset:
    return parse_poset(Path(path).read_text(encoding="utf-8"))


def write_poset(p: Poset, path: str | Path) -> None:
    Path(path).write_text(format_poset(p), encoding="utf-8")
