"""Pydantic request/response models for the HTTP service.

Rationals travel as canonical "num/den" strings (denominator omitted when 1);
graphs as {"n", "edges"}; frameworks additionally carry "coords".
"""

from __future__ import annotations

from typing import Optional

from pydantic import BaseModel, Field

from ..frameworks import Framework
from ..graphs import Graph, canon_edge
from ..io import rational_to_str
from ..linalg import Q, QMatrix
from ..matroid import DEFAULT_MASTER_SEED


class GraphModel(BaseModel):
    n: int = Field(ge=0)
    edges: list[tuple[int, int]] = []

    def to_graph(self) -> Graph:
        return Graph(self.n, frozenset(canon_edge(u, v) for u, v in self.edges))

    @classmethod
    def from_graph(cls, g: Graph) -> "GraphModel":
        return cls(n=g.n, edges=g.sorted_edges())


class FrameworkModel(BaseModel):
    n: int = Field(ge=0)
    edges: list[tuple[int, int]] = []
    coords: list[tuple[str, str]]

    def to_framework(self) -> Framework:
        g = Graph(self.n, frozenset(canon_edge(u, v) for u, v in self.edges))
        return Framework(g, tuple((Q(x), Q(y)) for x, y in self.coords))

    @classmethod
    def from_framework(cls, f: Framework) -> "FrameworkModel":
        return cls(
            n=f.graph.n,
            edges=f.graph.sorted_edges(),
            coords=[(rational_to_str(x), rational_to_str(y)) for x, y in f.coords],
        )


class Mat3Model(BaseModel):
    rows: list[list[str]]

    def to_matrix(self) -> QMatrix:
        if len(self.rows) != 3 or any(len(r) != 3 for r in self.rows):
            raise ValueError("mat3: need a 3x3 array")
        return QMatrix.from_rows([[Q(e) for e in row] for row in self.rows])

    @classmethod
    def from_matrix(cls, m: QMatrix) -> "Mat3Model":
        return cls(rows=[[rational_to_str(e) for e in m.row(i)] for i in range(3)])


class RankRequest(BaseModel):
    graph: GraphModel
    seed: int = DEFAULT_MASTER_SEED


class RankResponse(BaseModel):
    rank: int
    independent: bool
    rigid: bool
    dof: int
    certificate: dict


class ClosureRequest(BaseModel):
    graph: GraphModel
    edges: list[tuple[int, int]]
    seed: int = DEFAULT_MASTER_SEED


class ClosureResponse(BaseModel):
    rank: int
    closure: list[tuple[int, int]]
    certificate: dict


class MotionsRequest(BaseModel):
    framework: FrameworkModel
    pins: tuple[int, int, int]


class MotionsResponse(BaseModel):
    dof: int
    basis: list[list[list[str]]]


class VerifyRequest(BaseModel):
    suite: str
    trials: Optional[int] = None
    seed: int = DEFAULT_MASTER_SEED


class VerifyResponse(BaseModel):
    suite: str
    trials: int
    seed: int
    passed: bool
    counterexamples: list


class Map4Request(BaseModel):
    points: list[tuple[str, str]]


class Map4Response(BaseModel):
    matrix: Mat3Model


class ApplyRequest(BaseModel):
    matrix: Mat3Model
    framework: FrameworkModel


class ApplyResponse(BaseModel):
    framework: FrameworkModel


class ConvertRequest(BaseModel):
    src: FrameworkModel
    dst: FrameworkModel
    matrix: Mat3Model
    motion: list[list[str]]


class ConvertResponse(BaseModel):
    motion: list[list[str]]
    is_motion_of_dst: bool
