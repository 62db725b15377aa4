"""EL- and CL-labelings: verification, lifting and bounded-alphabet search.

An edge labeling is a plain ``dict`` mapping cover pairs ``(u, v)`` to ints.
A chain-edge labeling is a ``dict`` keyed by the chain ``(0, u1, ..., uk)``
from the bottom up to the top of the labelled edge; the edge is
``(u_{k-1}, u_k)`` and everything before it is its root.
"""

from __future__ import annotations

from collections.abc import Iterator, Mapping, Sequence
from dataclasses import dataclass
from pathlib import Path

from .errors import Budget, IncompleteLabelingError, ParseError, as_budget
from .poset import Chain, Poset

EdgeLabeling = dict[tuple[str, str], int]
ChainEdgeLabeling = dict[Chain, int]

WEAK = "weak"
STRICT = "strict"


@dataclass(frozen=True)
class LabelingResult:
    ok: bool
    mode: str
    #: first failing interval (x, y)
    interval: tuple[str, str] | None = None
    #: root of the failing rooted interval (CL only)
    root: Chain | None = None
    reason: str = ""

    def __bool__(self) -> bool:
        return self.ok


def _check_mode(mode: str) -> None:
    if mode not in (WEAK, STRICT):
        raise ValueError(f"mode must be 'weak' or 'strict', got {mode!r}")


def is_increasing(seq: Sequence[int], mode: str) -> bool:
    if mode == WEAK:
        return all(a <= b for a, b in zip(seq, seq[1:]))
    return all(a < b for a, b in zip(seq, seq[1:]))


def chain_labels(chain: Chain, labels: Mapping[tuple[str, str], int]) -> tuple[int, ...]:
    try:
        return tuple(labels[(u, v)] for u, v in zip(chain, chain[1:]))
    except KeyError as exc:
        raise IncompleteLabelingError(f"no label on cover {exc.args[0]}") from None


def _judge(seqs: list[tuple[int, ...]], mode: str) -> str:
    """Empty string if exactly one sequence is increasing and it strictly
    precedes every other one lexicographically; otherwise a reason."""
    inc = [i for i, s in enumerate(seqs) if is_increasing(s, mode)]
    if len(inc) != 1:
        return f"{len(inc)} {mode}ly increasing maximal chains"
    best = seqs[inc[0]]
    for i, s in enumerate(seqs):
        if i != inc[0] and not best < s:
            return "increasing chain is not lexicographically first"
    return ""


def _intervals(p: Poset) -> Iterator[tuple[str, str]]:
    for x in p.elements:
        for y in p.up_set(x):
            if y != x and y not in p.upper_covers(x):
                yield x, y


def verify_el_labeling(
    p: Poset, labels: Mapping[tuple[str, str], int], mode: str = WEAK
) -> LabelingResult:
    """Check that every closed interval has a unique increasing maximal chain
    which lexicographically precedes all others."""
    _check_mode(mode)
    p.require_bounded()
    missing = sorted(set(p.covers) - set(labels))
    if missing:
        raise IncompleteLabelingError(f"no label on cover {missing[0]}")
    for x, y in _intervals(p):
        seqs = [chain_labels(ch, labels) for ch in p.chains_between(x, y)]
        reason = _judge(seqs, mode)
        if reason:
            return LabelingResult(False, mode, (x, y), None, reason)
    return LabelingResult(True, mode)


def rooted_chains(p: Poset) -> list[Chain]:
    """Every saturated chain starting at the bottom (including the bottom alone)."""
    out: list[Chain] = []

    def walk(ch: Chain) -> None:
        out.append(ch)
        for v in p.upper_covers(ch[-1]):
            walk(ch + (v,))

    walk((p.bottom,))
    return out


def lift(p: Poset, labels: Mapping[tuple[str, str], int]) -> ChainEdgeLabeling:
    """The root-independent chain-edge labeling induced by an edge labeling."""
    out: ChainEdgeLabeling = {}
    for ch in rooted_chains(p):
        if len(ch) >= 2:
            out[ch] = labels[(ch[-2], ch[-1])]
    return out


def verify_cl_labeling(
    p: Poset, labels: Mapping[Chain, int], mode: str = STRICT
) -> LabelingResult:
    """Check the increasing-chain condition in every rooted interval ``[x, y]_r``."""
    _check_mode(mode)
    p.require_bounded()
    roots: dict[str, list[Chain]] = {}
    for ch in rooted_chains(p):
        roots.setdefault(ch[-1], []).append(ch)
    for x, y in _intervals(p):
        inner = p.chains_between(x, y)
        for r in roots[x]:
            seqs = []
            for ch in inner:
                full = r + ch[1:]
                try:
                    seqs.append(
                        tuple(labels[full[: t + 1]] for t in range(len(r), len(full)))
                    )
                except KeyError as exc:
                    raise IncompleteLabelingError(
                        f"no label for rooted edge {'>'.join(exc.args[0])}"
                    ) from None
            reason = _judge(seqs, mode)
            if reason:
                return LabelingResult(False, mode, (x, y), r, reason)
    return LabelingResult(True, mode)


def search_el_labeling(
    p: Poset,
    alphabet_size: int,
    mode: str = WEAK,
    limit: int | Budget | None = None,
) -> EdgeLabeling | None:
    """Backtracking search for an EL-labeling with labels in ``1..alphabet_size``.

    ``None`` only means no such labeling uses this alphabet; it says nothing
    about EL-shellability with other label posets.
    """
    _check_mode(mode)
    budget = as_budget(limit)
    p.require_bounded()
    order = p.linear_extension()
    edges: list[tuple[str, str]] = []
    # (number of edges labelled when the check becomes possible, intervals to check)
    checkpoints: dict[int, list[list[tuple[int, ...]]]] = {}
    for y in order:
        for u in p.lower_covers(y):
            edges.append((u, y))
        done = len(edges)
        for x in p.down_set(y):
            if x == y or y in p.upper_covers(x):
                continue
            chains = [
                tuple(edges.index((a, b)) for a, b in zip(ch, ch[1:]))
                for ch in p.chains_between(x, y)
            ]
            checkpoints.setdefault(done, []).append(chains)

    values = [0] * len(edges)
    alphabet = range(1, alphabet_size + 1)

    def ok_at(k: int) -> bool:
        for chains in checkpoints.get(k, ()):
            seqs = [tuple(values[e] for e in ch) for ch in chains]
            if _judge(seqs, mode):
                return False
        return True

    def assign(k: int) -> bool:
        if k == len(edges):
            return True
        for lab in alphabet:
            budget.tick()
            values[k] = lab
            if ok_at(k + 1) and assign(k + 1):
                return True
        return False

    if not ok_at(0) or not assign(0):
        return None
    return {e: values[i] for i, e in enumerate(edges)}


# -- .lbl / .cll files ---------------------------------------------------


def parse_labeling(text: str) -> EdgeLabeling:
    out: EdgeLabeling = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 3:
            raise ParseError(f"line {lineno}: expected 'u v label'")
        try:
            lab = int(parts[2])
        except ValueError:
            raise ParseError(f"line {lineno}: label {parts[2]!r} is not an integer") from None
        key = (parts[0], parts[1])
        if key in out:
            raise ParseError(f"line {lineno}: duplicate cover {parts[0]} {parts[1]}")
        out[key] = lab
    return out


def format_labeling(labels: Mapping[tuple[str, str], int]) -> str:
    return "".join(f"{u} {v} {k}\n" for (u, v), k in sorted(labels.items()))


def parse_chain_labeling(text: str) -> ChainEdgeLabeling:
    out: ChainEdgeLabeling = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if ":" not in line:
            raise ParseError(f"line {lineno}: expected 'u0>u1>...>uk : label'")
        lhs, rhs = line.rsplit(":", 1)
        key = tuple(t.strip() for t in lhs.split(">"))
        if len(key) < 2 or not all(key):
            raise ParseError(f"line {lineno}: a rooted edge needs at least two elements")
        try:
            lab = int(rhs.strip())
        except ValueError:
            raise ParseError(f"line {lineno}: label {rhs.strip()!r} is not an integer") from None
        if key in out and out[key] != lab:
            raise ParseError(f"line {lineno}: conflicting labels for {lhs.strip()}")
        out[key] = lab
    return out


def format_chain_labeling(labels: Mapping[Chain, int]) -> str:
    return "".join(f"{'>'.join(k)} : {v}\n" for k, v in sorted(labels.items()))


def read_labeling(path: str | Path) -> EdgeLabeling:
    return parse_labeling(Path(path).read_text(encoding="utf-8"))


def read_chain_labeling(path: str | Path) -> ChainEdgeLabeling:
    return parse_chain_labeling(Path(path).read_text(encoding="utf-8"))
