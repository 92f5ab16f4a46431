"""JSON documents for webs and bipartite graphs, random webs, DOT rendering."""

from __future__ import annotations

import json
import random
from typing import Iterable

from .bipartite import BipartiteGraph
from .core import Vertex, Web, WebError, make_web, ordered, ordered_edges

__all__ = [
    "ParseError",
    "parse_web",
    "emit_web",
    "web_document",
    "parse_bipartite",
    "emit_bipartite",
    "random_web",
    "random_bipartite",
    "to_dot",
    "canonical_json",
]

WEB_FIELDS = {"vertices", "edges", "A", "B", "name", "seed"}
BIPARTITE_FIELDS = {"M", "W", "edges", "name", "seed"}


class ParseError(WebError):
    pass


def canonical_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def _load(text: str) -> dict:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        lines = text.splitlines()
        line = lines[exc.lineno - 1] if exc.lineno <= len(lines) else ""
        raise ParseError(f"line {exc.lineno}, column {exc.colno}: {exc.msg}: {line.strip()!r}") from None
    if not isinstance(doc, dict):
        raise ParseError("line 1: top level must be an object")
    return doc


def _line_of(text: str, key: str) -> int:
    for k, line in enumerate(text.splitlines(), 1):
        if f'"{key}"' in line:
            return k
    return 1


def _str_list(text: str, doc: dict, key: str) -> list:
    val = doc.get(key)
    if not isinstance(val, list) or not all(isinstance(v, str) for v in val):
        raise ParseError(f"line {_line_of(text, key)}: field {key!r} must be a list of strings")
    return val


def _pairs(text: str, doc: dict, key: str = "edges") -> list:
    val = doc.get(key)
    ok = isinstance(val, list) and all(
        isinstance(e, list) and len(e) == 2 and all(isinstance(v, str) for v in e) for e in val
    )
    if not ok:
        raise ParseError(f"line {_line_of(text, key)}: field {key!r} must be a list of [tail, head] string pairs")
    return [tuple(e) for e in val]


def _fields(text: str, doc: dict, allowed: set, required: Iterable[str]) -> None:
    for k in doc:
        if k not in allowed:
            raise ParseError(f"line {_line_of(text, k)}: unknown field {k!r}")
    for k in required:
        if k not in doc:
            raise ParseError(f"line 1: missing field {k!r}")


def parse_web(text: str, *, strict: bool = False) -> Web:
    doc = _load(text)
    _fields(text, doc, WEB_FIELDS, ("vertices", "edges", "A", "B"))
    V = _str_list(text, doc, "vertices")
    E = _pairs(text, doc)
    A = _str_list(text, doc, "A")
    B = _str_list(text, doc, "B")
    try:
        return make_web(V, E, A, B, strict=strict)
    except WebError as exc:
        raise ParseError(str(exc)) from None


def web_document(w: Web, **meta) -> dict:
    doc = {
        "vertices": ordered(w.vertices),
        "edges": [list(e) for e in ordered_edges(w.edges)],
        "A": ordered(w.A),
        "B": ordered(w.B),
    }
    doc.update({k: v for k, v in meta.items() if v is not None})
    return doc


def emit_web(w: Web, **meta) -> str:
    return canonical_json(web_document(w, **meta))


def parse_bipartite(text: str) -> BipartiteGraph:
    doc = _load(text)
    _fields(text, doc, BIPARTITE_FIELDS, ("M", "W", "edges"))
    M = _str_list(text, doc, "M")
    W = _str_list(text, doc, "W")
    E = _pairs(text, doc)
    if len(set(M)) != len(M) or len(set(W)) != len(W):
        raise ParseError("duplicate vertex ids")
    try:
        return BipartiteGraph(frozenset(M), frozenset(W), frozenset(E))
    except WebError as exc:
        raise ParseError(str(exc)) from None


def emit_bipartite(d: BipartiteGraph) -> str:
    return canonical_json(
        {"M": ordered(d.M), "W": ordered(d.W), "edges": [list(e) for e in ordered_edges(d.edges)]}
    )


def random_web(n: int, p: float, seed: int) -> Web:
    """Random digraph on ``v0..v{n-1}``; ``A`` and ``B`` are disjoint random sets."""
    if not 0 <= p <= 1:
        raise ValueError("edge probability must lie in [0, 1]")
    rng = random.Random(seed)
    names = [f"v{i}" for i in range(n)]
    edges = [(x, y) for x in names for y in names if x != y and rng.random() < p]
    roles = [rng.choice("ABNN") for _ in names]
    A = [v for v, r in zip(names, roles) if r == "A"]
    B = [v for v, r in zip(names, roles) if r == "B"]
    return make_web(names, edges, A, B)


def random_bipartite(m: int, k: int, p: float, seed: int) -> BipartiteGraph:
    rng = random.Random(seed)
    M = [f"m{i}" for i in range(m)]
    W = [f"w{i}" for i in range(k)]
    return BipartiteGraph(frozenset(M), frozenset(W), frozenset((a, b) for a in M for b in W if rng.random() < p))


def _dot_id(v: Vertex) -> str:
    return json.dumps(str(v))


def to_dot(w: Web, *, paths: Iterable[tuple] = (), marked: Iterable[Vertex] = ()) -> str:
    """Graphviz rendering; path edges bold, marked vertices filled."""
    on_path = {e for p in paths for e in zip(p, p[1:])}
    marked = set(marked)
    lines = ["digraph web {", "  rankdir=LR;"]
    for v in ordered(w.vertices):
        attrs = []
        if v in w.A and v in w.B:
            attrs.append("shape=doublecircle")
        elif v in w.A:
            attrs.append("shape=box")
        elif v in w.B:
            attrs.append("shape=doubleoctagon")
        if v in marked:
            attrs.append("style=filled, fillcolor=gold")
        lines.append(f"  {_dot_id(v)}" + (f" [{', '.join(attrs)}]" if attrs else "") + ";")
    for x, y in ordered_edges(w.edges):
        style = " [penwidth=3, color=firebrick]" if (x, y) in on_path else ""
        lines.append(f"  {_dot_id(x)} -> {_dot_id(y)}{style};")
    lines.append("}")
    return "\n".join(lines) + "\n"
