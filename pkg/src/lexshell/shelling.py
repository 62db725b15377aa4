"""Shelling orders of simplicial complexes: verification and exhaustive search."""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field

from .errors import (
    Budget,
    NotAFacetError,
    NotAPermutationError,
    NotShellableError,
    as_budget,
)
from .simplicial import Face, SimplicialComplex, make_face


@dataclass(frozen=True)
class ShellingResult:
    ok: bool
    #: 1-based position of the first facet whose intersection is wrong
    index: int | None = None
    #: inclusion-maximal faces of that facet's intersection with its predecessors
    intersection: tuple[Face, ...] = field(default=())

    def __bool__(self) -> bool:
        return self.ok


def _maximal(faces: Iterable[frozenset[str]]) -> list[frozenset[str]]:
    uniq = set(faces)
    return [f for f in uniq if not any(f < g for g in uniq)]


def _attach_ok(facet: Face, previous: Iterable[Face]) -> tuple[bool, list[frozenset[str]]]:
    target = len(facet) - 1
    f = frozenset(facet)
    tops = _maximal(f & frozenset(g) for g in previous)
    ok = bool(tops) and all(len(t) == target for t in tops)
    return ok, tops


def is_shelling(c: SimplicialComplex, order: Sequence[Iterable[str]]) -> ShellingResult:
    """Check that ``order`` lists the facets of ``c`` as a shelling.

    For every position k >= 2 the faces ``F_k & F_i`` (i < k) are reduced to
    their inclusion-maximal members, which must all have dimension
    ``dim F_k - 1``.
    """
    faces = [make_face(f) for f in order]
    if sorted(faces) != list(c.facets):
        raise NotAPermutationError("order is not a permutation of the facets")
    for k in range(1, len(faces)):
        ok, tops = _attach_ok(faces[k], faces[:k])
        if not ok:
            inter = tuple(sorted(tuple(sorted(t)) for t in tops))
            return ShellingResult(False, k + 1, inter)
    return ShellingResult(True)


class _Search:
    """Backtracking over facet subsets.

    Whether a facet may be attached depends only on the *set* of facets already
    placed, so dead subsets are memoised by bitmask.
    """

    def __init__(self, c: SimplicialComplex, budget: Budget):
        self.facets = c.facets
        self.n = len(self.facets)
        self.full = (1 << self.n) - 1
        self.budget = budget
        vmask = {v: 1 << i for i, v in enumerate(c.vertices)}
        self.fmask = [sum(vmask[v] for v in f) for f in self.facets]
        self.size = [len(f) for f in self.facets]
        self._valid: dict[tuple[int, int], bool] = {}
        self._memo: dict[tuple[int, int], bool] = {}

    def valid(self, placed: int, j: int) -> bool:
        if not placed:
            return True
        key = (placed, j)
        hit = self._valid.get(key)
        if hit is not None:
            return hit
        fj = self.fmask[j]
        want = self.size[j] - 1
        inters = set()
        m = placed
        while m:
            low = m & -m
            inters.add(fj & self.fmask[low.bit_length() - 1])
            m ^= low
        tops = [x for x in inters if not any(x != y and x & y == x for y in inters)]
        ok = bool(tops) and all(bin(t).count("1") == want for t in tops)
        self._valid[key] = ok
        return ok

    def completable(self, placed: int, last: int | None) -> bool:
        """Can ``placed`` be extended to a full shelling (ending at ``last`` if given)?"""
        if placed == self.full:
            return True
        key = (placed, -1 if last is None else last)
        hit = self._memo.get(key)
        if hit is not None:
            return hit
        result = False
        for j in range(self.n):
            if placed >> j & 1:
                continue
            nxt = placed | 1 << j
            if last is not None and j == last and nxt != self.full:
                continue
            self.budget.tick()
            if self.valid(placed, j) and self.completable(nxt, last):
                result = True
                break
        self._memo[key] = result
        return result

    def least_order(self, last: int | None) -> list[int] | None:
        if not self.completable(0, last):
            return None
        placed, seq = 0, []
        while placed != self.full:
            for j in range(self.n):
                if placed >> j & 1:
                    continue
                nxt = placed | 1 << j
                if last is not None and j == last and nxt != self.full:
                    continue
                if self.valid(placed, j) and self.completable(nxt, last):
                    seq.append(j)
                    placed = nxt
                    break
        return seq


def find_shelling(
    c: SimplicialComplex,
    limit: int | Budget | None = None,
    last: Iterable[str] | None = None,
) -> list[Face] | None:
    """Lexicographically least shelling of ``c`` (optionally ending in ``last``).

    Returns ``None`` only after exhausting the search space; running out of
    budget raises :class:`ResourceLimitError` instead.
    """
    search = _Search(c, as_budget(limit))
    last_idx = None
    if last is not None:
        f = make_face(last)
        if f not in c.facets:
            raise NotAFacetError(f"{f} is not a facet")
        last_idx = c.facets.index(f)
    seq = search.least_order(last_idx)
    return None if seq is None else [c.facets[j] for j in seq]


def forced_last_facet(
    c: SimplicialComplex, f: Iterable[str], limit: int | Budget | None = None
) -> bool:
    """True iff every shelling of ``c`` puts ``f`` in the last position."""
    face = make_face(f)
    if face not in c.facets:
        raise NotAFacetError(f"{face} is not a facet")
    budget = as_budget(limit)
    search = _Search(c, budget)
    if not search.completable(0, None):
        raise NotShellableError("complex has no shelling")
    target = c.facets.index(face)
    # A shelling with f not last exists iff some reachable prefix contains f,
    # is proper, and still completes.
    seen: set[int] = set()
    stack = [0]
    while stack:
        placed = stack.pop()
        for j in range(search.n):
            if placed >> j & 1:
                continue
            nxt = placed | 1 << j
            if nxt in seen or nxt == search.full:
                continue
            budget.tick()
            if not search.valid(placed, j) or not search.completable(nxt, None):
                continue
            if nxt >> target & 1:
                return False
            seen.add(nxt)
            stack.append(nxt)
    return True


def lex_order_shelling_check(p, labels) -> ShellingResult:
    """Order the maximal chains of ``p`` by label sequence and test that the
    matching facets of the proper part's order complex form a shelling."""
    from .labeling import chain_labels

    chains = p.maximal_chains()
    keyed = sorted((chain_labels(ch, labels), ch) for ch in chains)
    facets = [ch[1:-1] for _, ch in keyed]
    if all(len(f) == 0 for f in facets):
        return ShellingResult(True)
    return is_shelling(SimplicialComplex(facets), facets)
