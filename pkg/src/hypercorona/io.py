"""Reading and writing hypergraphs (``.hg`` text and JSON) and corona configs.

The ``.hg`` format::

    # optional comments
    k=3
    n=4
    e 0 1 2
    e 0 1 3

Edges are 0-based and written in ascending order; ``#`` starts a comment.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from .hypergraph import Hypergraph, HypergraphError


class ParseError(ValueError):
    def __init__(self, message: str, line: int | None = None, source: str | None = None):
        self.line = line
        self.source = source
        where = ""
        if source:
            where += f"{source}:"
        if line is not None:
            where += f"{line}:"
        super().__init__(f"{where} {message}" if where else message)


def parse_hg(text: str, source: str | None = None) -> Hypergraph:
    k = n = None
    edges = []
    saw_content = False
    for lineno, raw in enumerate(text.split("\n"), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        saw_content = True
        if k is None:
            k = _header(line, "k", lineno, source)
            continue
        if n is None:
            n = _header(line, "n", lineno, source)
            continue
        parts = line.split()
        if parts[0] != "e":
            raise ParseError(f"expected an edge line 'e v1 ... vk', got {line!r}", lineno, source)
        try:
            edge = [int(v) for v in parts[1:]]
        except ValueError:
            raise ParseError(f"non-integer vertex in {line!r}", lineno, source) from None
        if len(edge) != k:
            raise ParseError(f"edge has {len(edge)} vertices, expected k={k}", lineno, source)
        if any(v < 0 or v >= n for v in edge):
            raise ParseError(f"vertex out of range 0..{n - 1} in {line!r}", lineno, source)
        if edge != sorted(edge):
            raise ParseError(f"edge vertices must be ascending in {line!r}", lineno, source)
        edges.append((lineno, tuple(edge)))
    if not saw_content:
        raise ParseError("empty hypergraph file", None, source)
    if k is None or n is None:
        raise ParseError("missing 'k=' or 'n=' header", None, source)
    seen: dict[tuple[int, ...], int] = {}
    for lineno, e in edges:
        if e in seen:
            raise ParseError(f"duplicate edge {list(e)} (first on line {seen[e]})", lineno, source)
        seen[e] = lineno
    try:
        return Hypergraph(n, k, tuple(e for _, e in edges))
    except HypergraphError as exc:
        raise ParseError(str(exc), None, source) from None


def _header(line: str, key: str, lineno: int, source: str | None) -> int:
    name, sep, value = line.partition("=")
    if not sep or name.strip() != key:
        raise ParseError(f"expected '{key}=<int>', got {line!r}", lineno, source)
    try:
        return int(value.strip())
    except ValueError:
        raise ParseError(f"expected an integer after '{key}='", lineno, source) from None


def format_hg(H: Hypergraph) -> str:
    lines = [f"k={H.k}", f"n={H.n}"]
    lines += ["e " + " ".join(str(v) for v in e) for e in H.edges]
    return "\n".join(lines) + "\n"


def hypergraph_to_dict(H: Hypergraph) -> dict[str, Any]:
    return {"k": H.k, "n": H.n, "edges": [list(e) for e in H.edges]}


def hypergraph_from_dict(data: dict[str, Any], source: str | None = None) -> Hypergraph:
    try:
        return Hypergraph(int(data["n"]), int(data["k"]), tuple(tuple(e) for e in data["edges"]))
    except KeyError as exc:
        raise ParseError(f"missing field {exc.args[0]!r}", None, source) from None
    except (TypeError, ValueError) as exc:
        raise ParseError(str(exc), None, source) from None


def read_hypergraph(path: str | Path) -> Hypergraph:
    path = Path(path)
    text = path.read_text(encoding="utf-8")
    if path.suffix == ".json":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(exc.msg, exc.lineno, str(path)) from None
        return hypergraph_from_dict(data, str(path))
    return parse_hg(text, str(path))


def write_hypergraph(H: Hypergraph, path: str | Path) -> None:
    path = Path(path)
    if path.suffix == ".json":
        path.write_text(dumps(hypergraph_to_dict(H)) + "\n", encoding="utf-8")
    else:
        path.write_text(format_hg(H), encoding="utf-8")


def dumps(obj: Any) -> str:
    """Deterministic JSON: sorted keys, fixed separators."""
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False)
