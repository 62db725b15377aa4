"""Slow, direct re-implementations used to cross-check the engines.

Nothing here shares code with the library beyond reading a poset's covers;
the definitions are applied literally (full face sets, every upper bound,
every permutation).
"""

from __future__ import annotations

from itertools import combinations, permutations, product


def order_relation(covers, elements):
    """Reflexive-transitive closure as a set of pairs."""
    leq = {(e, e) for e in elements}
    changed = True
    leq |= set(covers)
    while changed:
        changed = False
        for a, b in list(leq):
            for c, d in list(leq):
                if b == c and (a, d) not in leq:
                    leq.add((a, d))
                    changed = True
    return leq


class Naive:
    def __init__(self, p):
        self.elements = list(p.elements)
        self.covers = set(p.covers)
        self.leq = order_relation(self.covers, self.elements)
        self.bottom = next(e for e in self.elements if all((e, f) in self.leq for f in self.elements))
        self.top = next(e for e in self.elements if all((f, e) in self.leq for f in self.elements))

    def ups(self, u):
        return sorted(v for (a, v) in self.covers if a == u)

    def chains(self, x, y):
        if x == y:
            return [(x,)]
        return [(x,) + rest for v in self.ups(x) if (v, y) in self.leq for rest in self.chains(v, y)]


def all_faces(facet):
    return {frozenset(s) for k in range(len(facet) + 1) for s in combinations(facet, k)}


def naive_is_shelling(order) -> bool:
    seen: set[frozenset] = set()
    for k, f in enumerate(order):
        mine = all_faces(f)
        if k:
            common = [s for s in mine if s in seen and s]
            tops = [s for s in common if not any(s < t for t in common)]
            if not tops or any(len(t) != len(f) - 1 for t in tops):
                return False
        seen |= mine
    return True


def naive_shellings(facets):
    return [o for o in permutations(facets) if naive_is_shelling(o)]


def naive_el(p, labels, weak=True) -> bool:
    n = Naive(p)
    for x in n.elements:
        for y in n.elements:
            if x == y or (x, y) not in n.leq or y in n.ups(x):
                continue
            seqs = [tuple(labels[e] for e in zip(c, c[1:])) for c in n.chains(x, y)]
            inc = [s for s in seqs if all((a <= b) if weak else (a < b) for a, b in zip(s, s[1:]))]
            if len(inc) != 1 or any(inc[0] >= s for s in seqs if s != inc[0]):
                return False
            if seqs.count(inc[0]) != 1:
                return False
    return True


def naive_el_labelings(p, alphabet, weak=True):
    covers = sorted(p.covers)
    for values in product(range(1, alphabet + 1), repeat=len(covers)):
        labels = dict(zip(covers, values))
        if naive_el(p, labels, weak):
            yield labels


def naive_rao_root_orders(p):
    """Every ordering of the bottom's atoms that extends to a full
    recursive atom ordering, checking condition 2 against every upper bound."""
    n = Naive(p)

    def cond2(order):
        for j in range(1, len(order)):
            zs = [z for z in n.ups(order[j]) if any((order[k], z) in n.leq and order[k] != z for k in range(j))]
            for i in range(j):
                for y in n.elements:
                    if (order[i], y) in n.leq and (order[j], y) in n.leq and y not in (order[i], order[j]):
                        if not any((z, y) in n.leq for z in zs):
                            return False
        return True

    memo = {}

    def ok(u, forced):
        key = (u, forced)
        if key in memo:
            return memo[key]
        ups = n.ups(u)
        if ups == [n.top]:
            memo[key] = True
            return True
        good = False
        for order in permutations(ups):
            if set(order[: len(forced)]) != set(forced) or not cond2(order):
                continue
            if all(
                ok(a, frozenset(z for z in n.ups(a) if any((e, z) in n.leq and e != z for e in order[:j])))
                for j, a in enumerate(order)
            ):
                good = True
                break
        memo[key] = good
        return good

    if n.ups(n.bottom) == [n.top]:
        return [()]
    out = []
    for order in permutations(n.ups(n.bottom)):
        if cond2(order) and all(
            ok(a, frozenset(z for z in n.ups(a) if any((e, z) in n.leq and e != z for e in order[:j])))
            for j, a in enumerate(order)
        ):
            out.append(order)
    return out
