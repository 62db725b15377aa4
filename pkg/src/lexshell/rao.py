"""Recursive atom orderings.

A certificate is a tree of :class:`RaoNode`. The root sits at the bottom of
the poset and orders its atoms; the child under atom ``a`` certifies the
interval ``[a, top]``. Nodes whose interval has length one are leaves with an
empty ordering.

The search engines work on bitmasks over the poset's canonical element
indices. Two facts keep them small:

* the constraint a node inherits from its parent (which atoms must come
  first) is determined by the *set* of earlier siblings, so subtrees are
  memoised on ``(element, forced-first set)``;
* whether an atom may be appended to a partial ordering likewise depends only
  on the set already placed, so dead prefixes are memoised as sets.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Mapping, Sequence
from dataclasses import dataclass, field
from pathlib import Path

from .errors import Budget, MalformedCertificateError, ParseError, as_budget
from .poset import Poset, _bits


@dataclass
class RaoNode:
    element: str
    order: tuple[str, ...] = ()
    children: dict[str, "RaoNode"] = field(default_factory=dict)

    def child(self, atom: str) -> "RaoNode":
        return self.children[atom]

    def count(self) -> int:
        """Number of nodes in the fully expanded tree."""
        return 1 + sum(c.count() for c in self.children.values())


RaoCertificate = RaoNode
RootIndependentOrderFamily = dict[str, tuple[str, ...]]


@dataclass(frozen=True)
class RaoResult:
    ok: bool
    #: elements from the bottom down to the failing node
    path: tuple[str, ...] = ()
    #: which condition failed: "prefix" (come-first) or "covering"
    condition: str = ""
    #: 1-based position in the node's ordering of the atom where it failed
    position: int | None = None
    atom: str | None = None
    detail: str = ""

    def __bool__(self) -> bool:
        return self.ok


# -- verification --------------------------------------------------------


def minimal_upper_bounds(p: Poset, a: str, b: str) -> list[str]:
    common = p._above[p.index(a)] & p._above[p.index(b)]
    mins = []
    for i in _bits(common):
        strictly_below = p._below[i] & common & ~(1 << i)
        if not strictly_below:
            mins.append(p.elements[i])
    return mins


def forced_first_set(p: Poset, u: str, earlier: Iterable[str]) -> set[str]:
    """Atoms of ``[u, top]`` lying above at least one element of ``earlier``."""
    earlier = list(earlier)
    up = p.mask(earlier)
    up_mask = 0
    for i in _bits(up):
        up_mask |= p._above[i]
    return {a for a in p.upper_covers(u) if up_mask >> p.index(a) & 1}


def _covering_failure(p: Poset, order: Sequence[str]) -> tuple[int, str, str, str] | None:
    """First (j, a_i, y, reason) where the second RAO condition fails.

    Only minimal common upper bounds ``y`` are tried; larger ones inherit the
    witness ``z <= y``.
    """
    for j in range(1, len(order)):
        aj = order[j]
        zs = [z for z in p.upper_covers(aj) if any(p.less(order[k], z) for k in range(j))]
        for i in range(j):
            for y in minimal_upper_bounds(p, order[i], aj):
                if not any(p.leq(z, y) for z in zs):
                    return j, order[i], y, f"no atom z of {aj} with an earlier atom below z <= {y}"
    return None


def verify_rao(p: Poset, cert: RaoNode) -> RaoResult:
    """Check both recursive-atom-ordering conditions at every node of ``cert``."""
    p.require_bounded()
    top = p.top
    if cert.element != p.bottom:
        raise MalformedCertificateError(
            f"certificate root is {cert.element!r}, expected {p.bottom!r}"
        )
    seen: dict[tuple[int, frozenset[str]], RaoResult] = {}

    # Failure paths are relative to the visited node and get prefixed on the way up.
    def visit(node: RaoNode, forced: frozenset[str]) -> RaoResult:
        key = (id(node), forced)
        if key not in seen:
            seen[key] = check(node, forced)
        return seen[key]

    def check(node: RaoNode, forced: frozenset[str]) -> RaoResult:
        u = node.element
        if u not in p:
            raise MalformedCertificateError(f"unknown element {u!r} in certificate")
        ups = p.upper_covers(u)
        if ups == [top]:
            if node.order or node.children:
                raise MalformedCertificateError(f"node {u!r} spans a length-1 interval")
            return RaoResult(True)
        if sorted(node.order) != ups:
            raise MalformedCertificateError(
                f"ordering at {u!r} is not a permutation of its atoms {ups}"
            )
        if set(node.children) != set(node.order):
            raise MalformedCertificateError(f"children of {u!r} do not match its ordering")
        k = len(forced)
        if set(node.order[:k]) != forced:
            late = min(forced - set(node.order[:k]), key=node.order.index)
            return RaoResult(False, (u,), "prefix", node.order.index(late) + 1, late,
                             f"atoms above earlier siblings must come first: {sorted(forced)}")
        bad = _covering_failure(p, node.order)
        if bad is not None:
            j, ai, y, why = bad
            return RaoResult(False, (u,), "covering", j + 1, node.order[j], why)
        for j, a in enumerate(node.order):
            child = node.children[a]
            if child.element != a:
                raise MalformedCertificateError(f"child under {a!r} is labelled {child.element!r}")
            sub = visit(child, frozenset(forced_first_set(p, a, node.order[:j])))
            if not sub.ok:
                return RaoResult(False, (u,) + sub.path, sub.condition, sub.position,
                                 sub.atom, sub.detail)
        return RaoResult(True)

    return visit(cert, frozenset())


# -- search ---------------------------------------------------------------


class _Engine:
    def __init__(self, p: Poset, budget: Budget):
        p.require_bounded()
        self.p = p
        self.budget = budget
        self.top = p.index(p.top)
        self.above = p._above
        self.up = p._up
        self.atom_mask = [sum(1 << j for j in ups) for ups in p._up]

    def up_of(self, mask: int) -> int:
        out = 0
        for i in _bits(mask):
            out |= self.above[i]
        return out

    def leafy(self, u: int) -> bool:
        return self.up[u] == (self.top,)

    def step_ok(self, placed_up: int, a: int) -> bool:
        """Covering condition for appending atom ``a`` after a set whose
        up-closure is ``placed_up``."""
        if not placed_up:
            return True
        common = placed_up & self.above[a]
        zs = self.atom_mask[a] & placed_up
        return common & ~self.up_of(zs) == 0


class _RaoSearch(_Engine):
    def __init__(self, p: Poset, budget: Budget):
        super().__init__(p, budget)
        self.solved: dict[tuple[int, int], RaoNode | None] = {}

    def solve(self, u: int, forced: int) -> RaoNode | None:
        key = (u, forced)
        if key in self.solved:
            return self.solved[key]
        name = self.p.elements[u]
        if self.leafy(u):
            node: RaoNode | None = RaoNode(name)
            self.solved[key] = node
            return node
        self.solved[key] = None  # guards against re-entry; overwritten below
        atoms = self.up[u]
        full = self.atom_mask[u]
        dead: set[int] = set()
        order: list[int] = []
        kids: dict[int, RaoNode] = {}

        def extend(placed: int, placed_up: int) -> bool:
            if placed == full:
                return True
            if placed in dead:
                return False
            pending = forced & ~placed
            for a in atoms:
                bit = 1 << a
                if placed & bit or (pending and not pending & bit):
                    continue
                self.budget.tick()
                if not self.step_ok(placed_up, a):
                    continue
                child = self.solve(a, self.atom_mask[a] & placed_up)
                if child is None:
                    continue
                order.append(a)
                kids[a] = child
                if extend(placed | bit, placed_up | self.above[a]):
                    return True
                order.pop()
                del kids[a]
            dead.add(placed)
            return False

        if extend(0, 0):
            els = self.p.elements
            node = RaoNode(name, tuple(els[a] for a in order),
                           {els[a]: kids[a] for a in order})
        else:
            node = None
        self.solved[key] = node
        return node


def find_rao(p: Poset, limit: int | Budget | None = None) -> RaoNode | None:
    """Search for a recursive atom ordering; ``None`` is an exhaustive refutation."""
    search = _RaoSearch(p, as_budget(limit))
    return search.solve(p.index(p.bottom), 0)


class _FamilySearch(_Engine):
    #: give up tabulating the possible forced sets of an element beyond this many prefixes
    TABLE_CAP = 1 << 15

    def __init__(self, p: Poset, budget: Budget):
        super().__init__(p, budget)
        # bottom-up so that every lower cover is decided before its upper covers
        self.order = [i for i in p._topo if i != self.top]
        self._tables: dict[int, dict[int, frozenset[int]] | None] = {}

    def table(self, w: int) -> dict[int, frozenset[int]] | None:
        """For each atom ``a`` of ``w``, every forced set ``a`` can receive from
        some complete ordering of ``w`` obeying the covering condition.

        This ignores the constraints ``w`` itself inherits, so it over-approximates;
        ``None`` means the prefix space of ``w`` was too large to tabulate.
        """
        if w in self._tables:
            return self._tables[w]
        atoms = self.up[w]
        full = self.atom_mask[w]
        alive: dict[int, bool] = {}
        out: dict[int, set[int]] = {a: set() for a in atoms}
        too_big = False

        def completes(placed: int, placed_up: int) -> bool:
            nonlocal too_big
            if placed == full:
                return True
            if placed in alive:
                return alive[placed]
            if len(alive) >= self.TABLE_CAP:
                too_big = True
                return True
            alive[placed] = False
            ok = False
            for a in atoms:
                if placed >> a & 1:
                    continue
                self.budget.tick()
                if self.step_ok(placed_up, a) and completes(placed | 1 << a, placed_up | self.above[a]):
                    ok = True
                    out[a].add(self.atom_mask[a] & placed_up)
            alive[placed] = ok
            return ok

        completes(0, 0)
        got = None if too_big else {a: frozenset(v) for a, v in out.items()}
        self._tables[w] = got
        return got

    def feasible(self, fixed: Sequence[int], pools: Sequence[frozenset[int]]) -> bool:
        """Can one set be picked from every pool so that, with ``fixed``, all
        the sets are nested?"""
        fixed = sorted(set(fixed), key=lambda m: bin(m).count("1"))
        for small, big in zip(fixed, fixed[1:]):
            if small & ~big:
                return False
        pools = sorted(pools, key=len)

        def pick(k: int, chosen: list[int]) -> bool:
            if k == len(pools):
                return True
            for m in pools[k]:
                if all(m & c in (m, c) for c in chosen):
                    chosen.append(m)
                    if pick(k + 1, chosen):
                        return True
                    chosen.pop()
            return False

        return pick(0, list(fixed))

    def pools(self, a: int, decided: Mapping[int, object], skip: int | None = None) -> list[frozenset[int]]:
        out = []
        for w in self.p._down[a]:
            if w == skip or w in decided:
                continue
            t = self.table(w)
            if t is not None:
                out.append(t[a])
        return out

    def options(
        self, u: int, prefixes: list[int], handed: Mapping[int, list[int]], decided: Mapping[int, object]
    ) -> Iterator[tuple[tuple[int, ...], tuple[int, ...]]]:
        """Distinct ways to order the atoms of ``u``, lexicographically.

        Each option is (signature, ordering) where the signature lists, per
        atom, the forced-first set it hands to its own ordering; orderings with
        equal signatures are interchangeable for everything above ``u``, so
        only the first ordering per signature is produced.
        """
        atoms = self.up[u]
        full = self.atom_mask[u]
        pos = {a: k for k, a in enumerate(atoms)}
        found: set[tuple[int, ...]] = set()
        visited: set[tuple[int, tuple[int, ...]]] = set()
        sig = [0] * len(atoms)
        seq: list[int] = []
        pools = {a: self.pools(a, decided, skip=u) for a in atoms}

        def walk(placed: int, placed_up: int) -> Iterator[tuple[tuple[int, ...], tuple[int, ...]]]:
            if placed == full:
                key = tuple(sig)
                if key not in found:
                    found.add(key)
                    yield key, tuple(seq)
                return
            state = (placed, tuple(sig))
            if state in visited:
                return
            visited.add(state)
            for a in atoms:
                bit = 1 << a
                if placed & bit:
                    continue
                if any(s & ~placed and not s & bit for s in prefixes):
                    continue
                self.budget.tick()
                if not self.step_ok(placed_up, a):
                    continue
                given = 0 if self.leafy(a) else self.atom_mask[a] & placed_up
                if given and not self.feasible(handed.get(a, []) + [given], pools[a]):
                    continue
                sig[pos[a]] = given
                seq.append(a)
                yield from walk(placed | bit, placed_up | self.above[a])
                seq.pop()
                sig[pos[a]] = 0

        return walk(0, 0)

    def run(self) -> dict[int, tuple[int, ...]] | None:
        chosen: dict[int, tuple[int, ...]] = {}
        handed: dict[int, list[int]] = {}  # element -> forced sets from its lower covers
        down = self.p._down
        pending = {u: len(down[u]) for u in self.order}
        ready = {u for u in self.order if pending[u] == 0}

        def pick() -> int:
            # most constrained first: it is where conflicts surface
            return min(ready, key=lambda u: (-len(set(handed.get(u, ()))), self.order.index(u)))

        def release(u: int, step: int) -> None:
            for a in self.up[u]:
                if a in pending:
                    pending[a] -= step
                    if step > 0 and pending[a] == 0:
                        ready.add(a)
                    elif step < 0 and pending[a] == 1:
                        ready.discard(a)

        for u in self.order:
            if not self.leafy(u) and not self.feasible([], self.pools(u, {})):
                return None

        def place() -> bool:
            if not ready:
                return len(chosen) == len(self.order)
            u = pick()
            ready.discard(u)
            if self.leafy(u):
                chosen[u] = ()
                release(u, 1)
                if place():
                    return True
                release(u, -1)
                del chosen[u]
                ready.add(u)
                return False
            prefixes = sorted(set(handed.get(u, [])), key=lambda m: bin(m).count("1"))
            for small, big in zip(prefixes, prefixes[1:]):
                if small & ~big:
                    ready.add(u)
                    return False
            for sig, ordering in self.options(u, [s for s in prefixes if s], handed, chosen):
                chosen[u] = ordering
                for a, s in zip(self.up[u], sig):
                    handed.setdefault(a, []).append(s)
                release(u, 1)
                if place():
                    return True
                release(u, -1)
                for a in self.up[u]:
                    handed[a].pop()
                del chosen[u]
            ready.add(u)
            return False

        return dict(chosen) if place() else None


def find_root_independent_rao(
    p: Poset, limit: int | Budget | None = None
) -> RootIndependentOrderFamily | None:
    """One atom ordering per element that works for every root at once.

    ``None`` is returned only after exhaustive search; since an EL-labeling
    induces such a family, ``None`` certifies that ``p`` is not EL-shellable.
    """
    search = _FamilySearch(p, as_budget(limit))
    got = search.run()
    if got is None:
        return None
    els = p.elements
    return {els[u]: tuple(els[a] for a in got[u]) for u in search.order}


def instantiate_family(p: Poset, family: Mapping[str, Sequence[str]]) -> RaoNode:
    """Expand a root-independent family into a certificate tree (nodes shared per element)."""
    made: dict[str, RaoNode] = {}
    top = p.top

    def node(u: str) -> RaoNode:
        if u in made:
            return made[u]
        if p.upper_covers(u) == [top]:
            n = RaoNode(u)
        else:
            if u not in family:
                raise MalformedCertificateError(f"family has no ordering for {u!r}")
            order = tuple(family[u])
            n = RaoNode(u, order, {a: node(a) for a in order if a in p})
        made[u] = n
        return n

    return node(p.bottom)


@dataclass(frozen=True)
class Obstruction:
    element: str
    first: int
    second: int
    first_set: frozenset[str]
    second_set: frozenset[str]


def el_obstruction(
    p: Poset, u: str, contexts: Sequence[Iterable[str]]
) -> Obstruction | None:
    """Two contexts whose forced-first sets at ``u`` cannot both be prefixes
    of one ordering of the atoms of ``u`` (neither set contains the other)."""
    sets = [frozenset(forced_first_set(p, u, ctx)) for ctx in contexts]
    for i in range(len(sets)):
        for j in range(i + 1, len(sets)):
            if not sets[i] <= sets[j] and not sets[j] <= sets[i]:
                return Obstruction(u, i, j, sets[i], sets[j])
    return None


# -- .rao files -----------------------------------------------------------

_INDENT = "  "


def format_rao(cert: RaoNode) -> str:
    lines: list[str] = []

    def emit(node: RaoNode, depth: int) -> None:
        body = " ".join(node.order)
        lines.append(f"{_INDENT * depth}{node.element}:" + (f" {body}" if body else ""))
        for a in node.order:
            emit(node.children[a], depth + 1)

    emit(cert, 0)
    return "\n".join(lines) + "\n"


def parse_rao(text: str) -> RaoNode:
    stack: list[tuple[int, RaoNode]] = []
    root: RaoNode | None = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        if not raw.strip() or raw.lstrip().startswith("#"):
            continue
        stripped = raw.lstrip(" ")
        depth, rem = divmod(len(raw) - len(stripped), len(_INDENT))
        if rem or ":" not in stripped:
            raise ParseError(f"line {lineno}: malformed certificate line")
        head, _, tail = stripped.partition(":")
        node = RaoNode(head.strip(), tuple(tail.split()))
        while stack and stack[-1][0] >= depth:
            stack.pop()
        if not stack:
            if root is not None or depth != 0:
                raise ParseError(f"line {lineno}: more than one root")
            root = node
        else:
            pdepth, parent = stack[-1]
            if depth != pdepth + 1:
                raise ParseError(f"line {lineno}: indentation jumps a level")
            if node.element in parent.children:
                raise ParseError(f"line {lineno}: duplicate child {node.element!r}")
            parent.children[node.element] = node
        stack.append((depth, node))
    if root is None:
        raise ParseError("empty certificate")
    return root


def format_family(family: Mapping[str, Sequence[str]]) -> str:
    return "".join(
        f"{u}:" + (" " + " ".join(o) if o else "") + "\n" for u, o in sorted(family.items())
    )


def parse_family(text: str) -> RootIndependentOrderFamily:
    out: RootIndependentOrderFamily = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if ":" not in line:
            raise ParseError(f"line {lineno}: expected '<element>: <atoms...>'")
        head, _, tail = line.partition(":")
        if head.strip() in out:
            raise ParseError(f"line {lineno}: duplicate element {head.strip()!r}")
        out[head.strip()] = tuple(tail.split())
    return out


def read_rao(path: str | Path) -> RaoNode:
    return parse_rao(Path(path).read_text(encoding="utf-8"))
