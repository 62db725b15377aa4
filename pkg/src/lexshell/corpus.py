"""Random small bounded posets for property checks."""

from __future__ import annotations

import random
from collections.abc import Iterator

from .poset import Poset, build_poset


def random_bounded_poset(rng: random.Random, max_size: int = 9, density: float = 0.35) -> Poset:
    """A bounded poset on at most ``max_size`` elements.

    The proper part is a random order on ``p0 .. p{k-1}`` (an edge ``i -> j``
    for ``i < j`` with probability ``density``, then transitively reduced);
    ``bot`` and ``top`` are glued on.
    """
    k = rng.randint(0, max_size - 2)
    names = [f"p{i}" for i in range(k)]
    above = [set() for _ in range(k)]
    for i in range(k - 1, -1, -1):
        for j in range(i + 1, k):
            if rng.random() < density and j not in above[i]:
                above[i] |= {j} | above[j]
    covers = []
    for i in range(k):
        for j in above[i]:
            if not any(j in above[m] for m in above[i]):
                covers.append((names[i], names[j]))
    lower = {j for i in range(k) for j in above[i]}
    covers += [("bot", names[i]) for i in range(k) if i not in lower]
    covers += [(names[i], "top") for i in range(k) if not above[i]]
    if k == 0:
        covers.append(("bot", "top"))
    return build_poset(covers)


def corpus(count: int, seed: int = 0, max_size: int = 9) -> Iterator[Poset]:
    rng = random.Random(seed)
    for _ in range(count):
        yield random_bounded_poset(rng, max_size, density=rng.choice((0.2, 0.35, 0.5)))
