"""Text and JSON formats: graphs, frameworks, rationals and 3x3 matrices.

Rationals serialize as canonical "num/den" strings with the denominator
omitted when it is 1.  All JSON emitted here uses sorted keys so identical
inputs produce byte-identical documents.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from .frameworks import Framework
from .graphs import Graph, canon_edge
from .linalg import Q, QMatrix


def rational_to_str(x: Fraction) -> str:
    x = Q(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def rational_from_str(s: str) -> Fraction:
    return Q(s)


# -- graphs -----------------------------------------------------------


def graph_to_text(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.sorted_edges())
    return "\n".join(lines) + "\n"


def graph_from_text(text: str) -> Graph:
    tokens = text.split()
    if len(tokens) < 2:
        raise ValueError("graph text: missing header line 'n m'")
    n, m = int(tokens[0]), int(tokens[1])
    body = tokens[2:]
    if len(body) != 2 * m:
        raise ValueError(f"graph text: expected {m} edge lines, found {len(body) // 2}")
    edges = [canon_edge(int(body[2 * i]), int(body[2 * i + 1])) for i in range(m)]
    return Graph(n, frozenset(edges))


def graph_to_json_obj(g: Graph) -> dict:
    return {"n": g.n, "edges": [[u, v] for u, v in g.sorted_edges()]}


def graph_from_json_obj(obj: dict) -> Graph:
    return Graph(int(obj["n"]), frozenset(canon_edge(int(u), int(v)) for u, v in obj["edges"]))


def parse_graph(text: str) -> Graph:
    """Accept either the JSON object form or the 'n m' text form."""
    stripped = text.lstrip()
    if stripped.startswith("{"):
        return graph_from_json_obj(json.loads(text))
    return graph_from_text(text)


# -- frameworks -------------------------------------------------------


def framework_to_json_obj(f: Framework) -> dict:
    return {
        "n": f.graph.n,
        "edges": [[u, v] for u, v in f.graph.sorted_edges()],
        "coords": [[rational_to_str(x), rational_to_str(y)] for x, y in f.coords],
    }


def framework_from_json_obj(obj: dict) -> Framework:
    g = graph_from_json_obj(obj)
    coords = tuple((Q(x), Q(y)) for x, y in obj["coords"])
    return Framework(g, coords)


def parse_framework(text: str) -> Framework:
    return framework_from_json_obj(json.loads(text))


# -- matrices and vectors ---------------------------------------------


def mat3_to_json_obj(m: QMatrix) -> list[list[str]]:
    if m.rows != 3 or m.cols != 3:
        raise ValueError("mat3 serialization: need a 3x3 matrix")
    return [[rational_to_str(e) for e in m.row(i)] for i in range(3)]


def mat3_from_json_obj(obj: list) -> QMatrix:
    if len(obj) != 3 or any(len(r) != 3 for r in obj):
        raise ValueError("mat3 parse: need a 3x3 array")
    return QMatrix.from_rows([[Q(e) for e in row] for row in obj])


def vector_to_strs(v) -> list[str]:
    return [rational_to_str(e) for e in v]


def motion_to_json_obj(q) -> list[list[str]]:
    return [vector_to_strs(t) for t in q]


def motion_from_json_obj(obj: list) -> list[list[Fraction]]:
    return [[Q(e) for e in t] for t in obj]


def dump_report(report: dict[str, Any]) -> str:
    """Deterministic JSON: sorted keys, fixed separators, trailing newline."""
    return json.dumps(report, sort_keys=True, indent=2) + "\n"
