"""Command line interface.

Exit codes: 0 success, 1 a certificate failed re-verification, 2 bad input.
Every command re-checks its own output from the emitted JSON before exiting.
"""

from __future__ import annotations

import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path as FsPath

import click

from . import oracle
from .bipartite import BipartiteGraph, hall_check, konig
from .core import Warp, Web, WebError, ordered, path_key
from .io import (
    ParseError,
    canonical_json,
    emit_web,
    parse_bipartite,
    parse_web,
    random_web,
    to_dot,
    web_document,
)
from .menger import MengerStructure, certificate_problems, hindrance_witness, linkage, menger_structure
from .separation import essential, rf
from .waves import blocking_wave, is_hindrance, is_wave, maximal_wave

INPUT_ERROR = 2
CERT_FAILURE = 1


class CertificateFailure(click.ClickException):
    exit_code = CERT_FAILURE


def _read(path: str) -> str:
    try:
        return FsPath(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise click.UsageError(f"cannot read {path}: {exc.strerror}") from None


def _load_web(path: str) -> Web:
    try:
        return parse_web(_read(path))
    except ParseError as exc:
        raise click.UsageError(f"{path}: {exc}") from None


def _paths_json(paths) -> list:
    return [list(p) for p in sorted(paths, key=path_key)]


def _emit(doc: dict) -> None:
    # only called once the certificate has been re-checked from ``doc``
    click.echo(canonical_json({**doc, "verified": True}), nl=False)


def _dot(dest: str | None, w: Web, paths=(), marked=()) -> None:
    if dest is None:
        return
    text = to_dot(w, paths=paths, marked=marked)
    if dest == "-":
        click.echo(text, err=True, nl=False)
    else:
        FsPath(dest).write_text(text, encoding="utf-8")


def _require(problems: list) -> None:
    if problems:
        raise CertificateFailure("certificate check failed: " + "; ".join(problems))


dot_option = click.option(
    "--dot",
    "dot",
    metavar="FILE",
    default=None,
    help="Also write a Graphviz rendering with the certificate highlighted ('-' for stderr).",
)


@click.group()
@click.version_option(package_name="artifact")
def main() -> None:
    """Menger structures, waves and matchings on finite webs."""


@main.command()
@click.argument("file")
@dot_option
def menger(file: str, dot: str | None) -> None:
    """Disjoint A-B paths plus a separator with one vertex on each."""
    w = _load_web(file)
    st = menger_structure(w)
    doc = {
        "nu": st.nu,
        "paths": _paths_json(st.paths),
        "separator": ordered(st.separator),
        "choice": [{"path": list(p), "vertex": st.choice[p]} for p in sorted(st.paths, key=path_key)],
    }
    back = MengerStructure(
        Warp(frozenset(tuple(c["path"]) for c in doc["choice"])),
        frozenset(doc["separator"]),
        {tuple(c["path"]): c["vertex"] for c in doc["choice"]},
    )
    _require(certificate_problems(w, back))
    _emit(doc)
    _dot(dot, w, st.paths, st.separator)


@main.command()
@click.argument("file")
@click.option("--maximal/--blocking", default=True, help="Maximal wave (default) or a single blocking wave.")
@dot_option
def wave(file: str, maximal: bool, dot: str | None) -> None:
    """A wave of the web together with the set its terminals roof."""
    w = _load_web(file)
    wv = maximal_wave(w) if maximal else blocking_wave(w)
    doc = {
        "kind": "maximal" if maximal else "blocking",
        "paths": _paths_json(wv.warp),
        "terminals": ordered(wv.ters),
        "essential_terminals": ordered(essential(w, wv.ters)),
        "rf": ordered(wv.roof),
    }
    back = Warp.of(*doc["paths"])
    problems = []
    if not is_wave(w, back):
        problems.append("emitted paths are not a wave")
    elif ordered(rf(w, back.ters)) != doc["rf"]:
        problems.append("roofed set does not match the terminals")
    _require(problems)
    _emit(doc)
    _dot(dot, w, wv.warp, wv.ters)


@main.command()
@click.argument("file")
@dot_option
def link(file: str, dot: str | None) -> None:
    """A linkage of A into B, or a hindrance showing none exists."""
    w = _load_web(file)
    L = linkage(w)
    if L is not None:
        doc = {"linkable": True, "linkage": _paths_json(L)}
        back = Warp.of(*doc["linkage"])
        _require([] if back.is_linkage(w) else ["emitted paths do not link A"])
        shown = L
    else:
        H = hindrance_witness(w)
        doc = {"linkable": False, "hindrance": _paths_json(H), "unlinked": ordered(w.A - H.ins)}
        back = Warp.of(*doc["hindrance"])
        _require([] if is_hindrance(w, back) else ["emitted paths are not a hindrance"])
        shown = H
    _emit(doc)
    _dot(dot, w, shown, shown.ters)


def _konig_problems(d: BipartiteGraph, matching, cover) -> list:
    out = []
    if not matching <= d.edges:
        out.append("matching uses a non-edge")
    ends = [v for e in matching for v in e]
    if len(set(ends)) != len(ends):
        out.append("matching edges share a vertex")
    if any(m not in cover and x not in cover for m, x in d.edges):
        out.append("cover misses an edge")
    if len(cover) != len(matching):
        out.append("cover and matching sizes differ")
    if any(len(cover & set(e)) != 1 for e in matching):
        out.append("some matching edge does not hold exactly one cover vertex")
    return out


@main.command("konig")
@click.argument("file")
@dot_option
def konig_cmd(file: str, dot: str | None) -> None:
    """Maximum matching and minimum vertex cover of a bipartite graph."""
    try:
        d = parse_bipartite(_read(file))
    except ParseError as exc:
        raise click.UsageError(f"{file}: {exc}") from None
    k = konig(d)
    h = hall_check(d)
    doc = {
        "matching": [list(e) for e in sorted(k.matching, key=path_key)],
        "cover": ordered(k.cover),
        "size": len(k.matching),
        "hall": {"saturates_M": h.matchable, "deficient": None if h.deficient is None else ordered(h.deficient)},
    }
    matching = frozenset(tuple(e) for e in doc["matching"])
    problems = _konig_problems(d, matching, frozenset(doc["cover"]))
    S = doc["hall"]["deficient"]
    if S is not None and len(d.neighbours(S)) >= len(S):
        problems.append("deficient set is not deficient")
    if (S is None) != (len(matching) == len(d.M)):
        problems.append("Hall verdict disagrees with the matching")
    _require(problems)
    _emit(doc)
    if dot is not None:
        from .bipartite import bipartite_web

        bw = bipartite_web(d)
        _dot(dot, bw, [tuple(e) for e in matching], k.cover)


def _check_one(path: str, seed: int, max_cases: int):
    w = parse_web(FsPath(path).read_text(encoding="utf-8"))
    budget = oracle.EnumerationBudget(max_vertices=oracle.oracle_bound(), max_cases=max_cases, seed=seed)
    return oracle.lemma_suite(w, budget)


@main.command()
@click.argument("files", nargs=-1, required=True)
@click.option("--seed", default=0, show_default=True, help="Seed for sampled lemma cases.")
@click.option("--max-cases", default=5000, show_default=True, help="Case cap per lemma check.")
@click.option("--jobs", "-j", default=1, show_default=True, help="Check files in parallel.")
@dot_option
def check(files: tuple, seed: int, max_cases: int, jobs: int, dot: str | None) -> None:
    """Run every lemma check against each web, validated by the oracle."""
    webs = {f: _load_web(f) for f in files}
    for f, w in webs.items():
        if len(w.vertices) > oracle.oracle_bound():
            raise click.UsageError(f"{f}: {len(w.vertices)} vertices exceed the oracle bound {oracle.oracle_bound()}")
    if jobs > 1 and len(files) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            reports = list(ex.map(_check_one, files, [seed] * len(files), [max_cases] * len(files)))
    else:
        reports = [_check_one(f, seed, max_cases) for f in files]
    doc = {"seed": seed, "max_cases": max_cases, "webs": []}
    for f, rep in zip(files, reports):
        doc["webs"].append(
            {
                "file": f,
                "ok": rep.ok,
                "checks": [
                    {"name": r.name, "passed": r.passed, "cases": r.cases, "witness": r.witness}
                    for r in rep.results
                ],
            }
        )
    click.echo(canonical_json(doc), nl=False)
    if dot is not None and len(files) == 1:
        _dot(dot, webs[files[0]])
    if not all(r.ok for r in reports):
        sys.exit(CERT_FAILURE)


@main.command()
@click.option("-n", "n", type=click.IntRange(min=0), required=True, help="Number of vertices.")
@click.option("-p", "p", type=click.FloatRange(0.0, 1.0), required=True, help="Edge probability.")
@click.option("--seed", type=int, default=0, show_default=True)
@dot_option
def gen(n: int, p: float, seed: int, dot: str | None) -> None:
    """Emit a random web document."""
    w = random_web(n, p, seed)
    text = emit_web(w, seed=seed)
    if parse_web(text) != w or canonical_json(web_document(parse_web(text), seed=seed)) != text:
        raise CertificateFailure("emitted document does not round-trip")
    click.echo(text, nl=False)
    _dot(dot, w)


def run() -> None:
    try:
        main(standalone_mode=True)
    except WebError as exc:
        click.echo(f"Error: {exc}", err=True)
        sys.exit(INPUT_ERROR)


if __name__ == "__main__":
    run()
