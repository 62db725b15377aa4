"""Command-line front end.

Every command prints a plain-text report (``key: value`` lines in
blank-line separated sections) and exits with

* 0 when the property holds or a witness was found,
* 1 when it fails or the search space was exhausted without a witness,
* 2 on unreadable or invalid input,
* 3 when the node budget ran out.
"""

from __future__ import annotations

import argparse
import os
import sys
import time
from collections.abc import Callable, Sequence
from dataclasses import dataclass, field
from pathlib import Path

from . import constructions as cons
from . import labeling, rao, shelling
from .errors import DEFAULT_LIMIT, Budget, LexshellError, ResourceLimitError
from .poset import Poset, read_poset, format_poset
from .simplicial import (
    SimplicialComplex,
    face_name,
    format_facets,
    make_face,
    order_complex,
    parse_facet_list,
    read_complex,
)

HOLDS, FAILS, NOT_FOUND, ERROR, LIMIT = "holds", "fails", "not-found", "error", "resource-limit"
EXIT = {HOLDS: 0, FAILS: 1, NOT_FOUND: 1, ERROR: 2, LIMIT: 3}


class InputError(Exception):
    """Bad command-line input that is not a library error."""


@dataclass
class Report:
    command: str
    verdict: str = HOLDS
    subject: list[tuple[str, str]] = field(default_factory=list)
    result: list[tuple[str, str]] = field(default_factory=list)
    body_title: str = ""
    body: str = ""
    #: file content written by ``-o``
    artifact: str | None = None

    def render(self, stats: list[tuple[str, str]]) -> str:
        sections = [
            [("verdict", self.verdict), ("command", self.command)] + self.subject,
        ]
        if self.result:
            sections.append(self.result)
        out = ["\n".join(f"{k}: {v}" for k, v in sec) for sec in sections]
        if self.body_title:
            out.append(f"{self.body_title}:\n{self.body.rstrip(chr(10))}")
        out.append("\n".join(f"{k}: {v}" for k, v in stats))
        return "\n\n".join(out) + "\n"


# -- input helpers ------------------------------------------------------------


def _poset(path: str) -> Poset:
    return read_poset(path)


def _complex(path: str, strip_bounds: bool) -> SimplicialComplex:
    """A ``.poset`` file stands for its order complex."""
    if path.endswith(".poset"):
        return order_complex(read_poset(path), strip_bounds=strip_bounds)
    return read_complex(path)


def _describe_poset(path: str, p: Poset) -> list[tuple[str, str]]:
    return [("input", path), ("elements", str(len(p))), ("covers", str(len(p.covers)))]


def _describe_complex(path: str, c: SimplicialComplex) -> list[tuple[str, str]]:
    return [("input", path), ("facets", str(len(c.facets))), ("dimension", str(c.dim)),
            ("pure", _yn(c.is_pure))]


def _yn(flag: bool) -> str:
    return "yes" if flag else "no"


def _faces(faces) -> str:
    return " ".join(face_name(f) for f in faces) or "(empty)"


# -- commands -------------------------------------------------------------------


def cmd_validate(a, budget: Budget) -> Report:
    r = Report("validate")
    if a.file.endswith(".cplx"):
        c = read_complex(a.file)
        r.subject = _describe_complex(a.file, c)
        r.result = [("vertices", str(len(c.vertices)))]
        return r
    p = _poset(a.file)
    r.subject = _describe_poset(a.file, p)
    r.result = [("bounded", _yn(p.is_bounded))]
    if p.is_bounded:
        rank = p.rank()
        r.result += [("bottom", p.bottom), ("top", p.top),
                     ("graded", _yn(rank is not None)), ("length", str(p.length()))]
    return r


def cmd_chains(a, budget: Budget) -> Report:
    p = _poset(a.file)
    chains = p.maximal_chains()
    r = Report("chains", subject=_describe_poset(a.file, p))
    r.result = [("count", str(len(chains)))]
    r.body_title = "chains"
    r.body = "\n".join(" ".join(ch) for ch in chains)
    return r


def cmd_graded(a, budget: Budget) -> Report:
    p = _poset(a.file)
    rank = p.rank()
    r = Report("graded", HOLDS if rank is not None else FAILS, _describe_poset(a.file, p))
    lengths = sorted({len(ch) - 1 for ch in p.maximal_chains()})
    r.result = [("rank", str(rank) if rank is not None else "none"),
                ("chain lengths", " ".join(map(str, lengths)))]
    return r


def cmd_shelling_check(a, budget: Budget) -> Report:
    c = _complex(a.complex, a.strip_bounds)
    order = parse_facet_list(Path(a.order).read_text(encoding="utf-8"))
    res = shelling.is_shelling(c, order)
    r = Report("shelling-check", HOLDS if res else FAILS, _describe_complex(a.complex, c))
    r.subject.append(("order", a.order))
    if not res:
        r.result = [("failing position", str(res.index)),
                    ("facet", face_name(order[res.index - 1])),
                    ("intersection", _faces(res.intersection))]
    return r


def cmd_shelling_find(a, budget: Budget) -> Report:
    c = _complex(a.complex, a.strip_bounds)
    last = make_face(a.last) if a.last else None
    order = shelling.find_shelling(c, limit=budget, last=last)
    r = Report("shelling-find", HOLDS if order else NOT_FOUND, _describe_complex(a.complex, c))
    if last:
        r.subject.append(("last", face_name(last)))
    if order:
        r.artifact = format_facets(order)
        r.body_title, r.body = "order", r.artifact
    return r


def cmd_forced_last(a, budget: Budget) -> Report:
    c = _complex(a.complex, a.strip_bounds)
    f = make_face(a.facet)
    forced = shelling.forced_last_facet(c, f, limit=budget)
    r = Report("forced-last", HOLDS if forced else FAILS, _describe_complex(a.complex, c))
    r.subject.append(("facet", face_name(f)))
    if not forced:
        # a shelling that does not end with f, as evidence
        for g in c.facets:
            if g != f:
                other = shelling.find_shelling(c, limit=budget, last=g)
                if other:
                    r.body_title = "counterexample"
                    r.body = format_facets(other)
                    break
    return r


def _labeling_result(r: Report, res: labeling.LabelingResult) -> None:
    r.verdict = HOLDS if res else FAILS
    r.result = [("mode", res.mode)]
    if not res:
        r.result.append(("interval", " ".join(res.interval)))
        if res.root is not None:
            r.result.append(("root", ">".join(res.root)))
        r.result.append(("reason", res.reason))


def cmd_el_check(a, budget: Budget) -> Report:
    p = _poset(a.poset)
    labels = labeling.read_labeling(a.labels)
    r = Report("el-check", subject=_describe_poset(a.poset, p))
    _labeling_result(r, labeling.verify_el_labeling(p, labels, a.mode or labeling.WEAK))
    return r


def cmd_cl_check(a, budget: Budget) -> Report:
    p = _poset(a.poset)
    labels = labeling.read_chain_labeling(a.labels)
    r = Report("cl-check", subject=_describe_poset(a.poset, p))
    _labeling_result(r, labeling.verify_cl_labeling(p, labels, a.mode or labeling.STRICT))
    return r


def cmd_el_find(a, budget: Budget) -> Report:
    p = _poset(a.poset)
    mode = a.mode or labeling.WEAK
    found = labeling.search_el_labeling(p, a.alphabet, mode, limit=budget)
    r = Report("el-find", HOLDS if found else NOT_FOUND, _describe_poset(a.poset, p))
    r.result = [("mode", mode), ("alphabet", f"1..{a.alphabet}")]
    if found:
        r.artifact = labeling.format_labeling(found)
        r.body_title, r.body = "labeling", r.artifact
    else:
        r.result.append(("note", "no labeling over this alphabet; not a proof of non-EL-shellability"))
    return r


def cmd_lexorder_check(a, budget: Budget) -> Report:
    p = _poset(a.poset)
    labels = labeling.read_labeling(a.labels)
    res = shelling.lex_order_shelling_check(p, labels)
    r = Report("lexorder-check", HOLDS if res else FAILS, _describe_poset(a.poset, p))
    if not res:
        r.result = [("failing position", str(res.index)), ("intersection", _faces(res.intersection))]
    return r


def _rao_result(r: Report, res: rao.RaoResult) -> None:
    r.verdict = HOLDS if res else FAILS
    if not res:
        r.result = [("node", " > ".join(res.path)), ("condition", res.condition),
                    ("position", str(res.position)), ("atom", str(res.atom)),
                    ("detail", res.detail)]


def cmd_rao_check(a, budget: Budget) -> Report:
    p = _poset(a.poset)
    r = Report("rao-check", subject=_describe_poset(a.poset, p))
    if a.family:
        fam = rao.parse_family(Path(a.certificate).read_text(encoding="utf-8"))
        cert = rao.instantiate_family(p, fam)
        r.subject.append(("family", a.certificate))
    else:
        cert = rao.read_rao(a.certificate)
        r.subject.append(("certificate", a.certificate))
    _rao_result(r, rao.verify_rao(p, cert))
    return r


def cmd_rao_find(a, budget: Budget) -> Report:
    p = _poset(a.poset)
    cert = rao.find_rao(p, limit=budget)
    r = Report("rao-find", HOLDS if cert else NOT_FOUND, _describe_poset(a.poset, p))
    if cert:
        r.result = [("root order", " ".join(cert.order)), ("tree nodes", str(cert.count()))]
        r.artifact = rao.format_rao(cert)
        r.body_title, r.body = "certificate", r.artifact
    else:
        r.result = [("conclusion", "no recursive atom ordering, so not CL-shellable")]
    return r


def cmd_rindep_rao(a, budget: Budget) -> Report:
    p = _poset(a.poset)
    fam = rao.find_root_independent_rao(p, limit=budget)
    r = Report("rindep-rao", HOLDS if fam is not None else NOT_FOUND, _describe_poset(a.poset, p))
    if fam is not None:
        r.artifact = rao.format_family(fam)
        r.body_title, r.body = "family", r.artifact
    else:
        r.result = [("conclusion", "no root-independent atom ordering, so not EL-shellable")]
    return r


def cmd_obstruct(a, budget: Budget) -> Report:
    p = _poset(a.poset)
    contexts: list[list[str]] = [list(c) for c in a.context or []]
    for below in a.context_below or []:
        contexts.append([e for e in p.upper_covers(below) if e != a.element])
    if a.element not in p:
        raise InputError(f"unknown element {a.element!r}")
    witness = rao.el_obstruction(p, a.element, contexts)
    r = Report("obstruct", HOLDS if witness else NOT_FOUND, _describe_poset(a.poset, p))
    r.subject.append(("element", a.element))
    for k, ctx in enumerate(contexts, 1):
        forced = sorted(rao.forced_first_set(p, a.element, ctx))
        r.result.append((f"context {k}", " ".join(ctx) or "(empty)"))
        r.result.append((f"forced {k}", " ".join(forced) or "(empty)"))
    if witness:
        r.result.append(("conflict", f"contexts {witness.first + 1} and {witness.second + 1} "
                                     "force incomparable prefixes"))
    return r


def _hachimori(path: str | None, budget: Budget) -> SimplicialComplex:
    return cons.load_hachimori(path, limit=budget)


def cmd_build_graded(a, budget: Budget) -> Report:
    h = _hachimori(a.complex, budget)
    p = cons.build_graded_example(h)
    r = Report("build-graded", subject=[("input", a.complex or "bundled hachimori.cplx")])
    r.result = [("elements", str(len(p))), ("expected elements", str(cons.expected_size(h))),
                ("covers", str(len(p.covers))), ("rank", str(p.rank())),
                ("atoms of 134", str(len(p.upper_covers("134"))))]
    r.artifact = format_poset(p)
    r.body_title, r.body = "poset", r.artifact
    return r


def cmd_graded_rao(a, budget: Budget) -> Report:
    h = _hachimori(a.complex, budget)
    p = cons.build_graded_example(h)
    order = shelling.find_shelling(h, limit=budget)
    cert = cons.build_graded_rao(p, order)
    res = rao.verify_rao(p, cert)
    r = Report("graded-rao", subject=[("input", a.complex or "bundled hachimori.cplx")])
    _rao_result(r, res)
    r.result = [("shelling", " ".join(face_name(f) for f in order)),
                ("root order", " ".join(cert.order)),
                ("tree nodes", str(cert.count()))] + r.result
    r.artifact = rao.format_rao(cert)
    r.body_title, r.body = "certificate", r.artifact
    return r


def cmd_hachimori_validate(a, budget: Budget) -> Report:
    r = Report("hachimori-validate", subject=[("input", a.complex or "bundled hachimori.cplx")])
    try:
        h = _hachimori(a.complex, budget)
    except cons.ValidationError as exc:
        r.verdict = FAILS
        r.result = [("failed property", exc.prop), ("detail", exc.detail)]
        return r
    order = shelling.find_shelling(h, limit=budget)
    r.result = [("facets", str(len(h.facets))), ("vertices", str(len(h.vertices))),
                ("shelling", " ".join(face_name(f) for f in order)),
                ("134 forced last", "yes")]
    return r


# -- argument parsing -----------------------------------------------------------


def _parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--limit", type=int, default=None,
                        help=f"search node budget (default $LEXSHELL_LIMIT or {DEFAULT_LIMIT})")
    common.add_argument("--deterministic", action=argparse.BooleanOptionalAction, default=True,
                        help="omit wall-clock time so reports are reproducible (default on)")
    common.add_argument("-o", "--output", help="write the certificate or labeling to this file")

    parser = argparse.ArgumentParser(prog="lexshell", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    def add(name: str, fn: Callable, helptext: str) -> argparse.ArgumentParser:
        sp = sub.add_parser(name, parents=[common], help=helptext)
        sp.set_defaults(fn=fn)
        return sp

    def strip(sp: argparse.ArgumentParser) -> None:
        sp.add_argument("--strip-bounds", action="store_true",
                        help="for a .poset input use the order complex of its proper part")

    def mode(sp: argparse.ArgumentParser) -> None:
        sp.add_argument("--mode", choices=[labeling.WEAK, labeling.STRICT], default=None)

    add("validate", cmd_validate, "parse a .poset or .cplx file").add_argument("file")
    add("chains", cmd_chains, "list maximal chains").add_argument("file")
    add("graded", cmd_graded, "decide gradedness").add_argument("file")

    sp = add("shelling-check", cmd_shelling_check, "check a facet order")
    sp.add_argument("complex"); sp.add_argument("order"); strip(sp)
    sp = add("shelling-find", cmd_shelling_find, "find the least shelling")
    sp.add_argument("complex"); sp.add_argument("--last", nargs="+"); strip(sp)
    sp = add("forced-last", cmd_forced_last, "does every shelling end with this facet?")
    sp.add_argument("complex"); sp.add_argument("facet", nargs="+"); strip(sp)

    sp = add("el-check", cmd_el_check, "verify an edge labeling")
    sp.add_argument("poset"); sp.add_argument("labels"); mode(sp)
    sp = add("el-find", cmd_el_find, "search an integer edge labeling")
    sp.add_argument("poset"); sp.add_argument("--alphabet", type=int, default=3); mode(sp)
    sp = add("cl-check", cmd_cl_check, "verify a chain-edge labeling")
    sp.add_argument("poset"); sp.add_argument("labels"); mode(sp)
    sp = add("lexorder-check", cmd_lexorder_check, "shell chains in label order")
    sp.add_argument("poset"); sp.add_argument("labels")

    sp = add("rao-check", cmd_rao_check, "verify a recursive atom ordering")
    sp.add_argument("poset"); sp.add_argument("certificate")
    sp.add_argument("--family", action="store_true",
                    help="the certificate is a per-element order family")
    add("rao-find", cmd_rao_find, "search a recursive atom ordering").add_argument("poset")
    add("rindep-rao", cmd_rindep_rao, "search a root-independent ordering").add_argument("poset")

    sp = add("obstruct", cmd_obstruct, "compare forced-first sets of contexts")
    sp.add_argument("poset"); sp.add_argument("element")
    sp.add_argument("--context", nargs="+", action="append", metavar="ELEM",
                    help="earlier siblings of ELEMENT in one context")
    sp.add_argument("--context-below", action="append", metavar="ELEM",
                    help="all other atoms of ELEM are earlier siblings")

    for name, fn, h in (
        ("build-graded", cmd_build_graded, "build the four-copy graded poset"),
        ("graded-rao", cmd_graded_rao, "recipe certificate for the graded poset"),
        ("hachimori-validate", cmd_hachimori_validate, "check the input complex"),
    ):
        add(name, fn, h).add_argument("complex", nargs="?", default=None)
    return parser


def _limit(a) -> int:
    if a.limit is not None:
        if a.limit <= 0:
            raise InputError("--limit must be positive")
        return a.limit
    env = os.environ.get("LEXSHELL_LIMIT")
    if env is None:
        return DEFAULT_LIMIT
    try:
        value = int(env)
    except ValueError:
        raise InputError(f"LEXSHELL_LIMIT={env!r} is not an integer") from None
    if value <= 0:
        raise InputError("LEXSHELL_LIMIT must be positive")
    return value


def main(argv: Sequence[str] | None = None) -> int:
    parser = _parser()
    try:
        a = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else EXIT[ERROR]
    start = time.perf_counter()
    budget = Budget(DEFAULT_LIMIT)
    try:
        budget = Budget(_limit(a))
        report = a.fn(a, budget)
    except ResourceLimitError as exc:
        report = Report(a.command, LIMIT, result=[("error", str(exc))])
    except (LexshellError, InputError, OSError, UnicodeDecodeError) as exc:
        report = Report(a.command, ERROR, result=[("error", str(exc))])
        print(f"lexshell: {exc}", file=sys.stderr)
    stats = [("limit", str(budget.limit)), ("nodes", str(budget.nodes))]
    if not a.deterministic:
        stats.append(("wall time", f"{time.perf_counter() - start:.3f}s"))
    if a.output and report.artifact is not None and report.verdict == HOLDS:
        Path(a.output).write_text(report.artifact, encoding="utf-8")
    sys.stdout.write(report.render(stats))
    return EXIT[report.verdict]


if __name__ == "__main__":
    sys.exit(main())
