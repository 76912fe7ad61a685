"""FastAPI service exposing the matroid, motion and projective operations.

Domain errors (ValueError/KeyError from the library) become 400 responses;
malformed payloads are rejected by pydantic as 422.
"""

from __future__ import annotations

from fastapi import FastAPI, HTTPException

from ..frameworks import (
    DegenerateFrameworkError,
    PinTriple,
    dof,
    is_motion,
    nontrivial_motion_basis,
)
from ..io import rational_to_str
from ..linalg import Q
from ..matroid import matroid_for
from ..projective import (
    apply_projective,
    convert_motion_pipeline,
    four_point_projective_map,
)
from ..verify import run_suite
from .schemas import (
    ApplyRequest,
    ApplyResponse,
    ClosureRequest,
    ClosureResponse,
    ConvertRequest,
    ConvertResponse,
    FrameworkModel,
    Map4Request,
    Map4Response,
    Mat3Model,
    MotionsRequest,
    MotionsResponse,
    RankRequest,
    RankResponse,
    VerifyRequest,
    VerifyResponse,
)

app = FastAPI(title="cofactor-rigidity", version="0.1.0")


def _bad_request(exc: Exception) -> HTTPException:
    return HTTPException(status_code=400, detail=str(exc))


@app.get("/health")
def health() -> dict:
    return {"status": "ok"}


@app.post("/rank", response_model=RankResponse)
def rank(req: RankRequest) -> RankResponse:
    try:
        g = req.graph.to_graph()
        m = matroid_for(g.n, req.seed)
        r = m.rank(g.edges)
    except (ValueError, KeyError) as exc:
        raise _bad_request(exc)
    rigid = g.n < 3 or r == 3 * g.n - 6
    return RankResponse(
        rank=r,
        independent=r == g.m,
        rigid=rigid,
        dof=0 if g.n < 3 else (3 * g.n - 6) - r,
        certificate=m.certificate(),
    )


@app.post("/closure", response_model=ClosureResponse)
def closure(req: ClosureRequest) -> ClosureResponse:
    try:
        g = req.graph.to_graph()
        m = matroid_for(g.n, req.seed)
        edges = frozenset((min(u, v), max(u, v)) for u, v in req.edges)
        for u, v in edges:
            if not (0 <= u < g.n and v < g.n):
                raise ValueError(f"edge ({u},{v}) out of range for n={g.n}")
        cl = m.closure(edges)
        r = m.rank(edges)
    except (ValueError, KeyError) as exc:
        raise _bad_request(exc)
    return ClosureResponse(rank=r, closure=sorted(cl), certificate=m.certificate())


@app.post("/motions", response_model=MotionsResponse)
def motions(req: MotionsRequest) -> MotionsResponse:
    try:
        f = req.framework.to_framework()
        pins = PinTriple(*req.pins)
        basis = nontrivial_motion_basis(f, pins)
        k = dof(f)
    except (ValueError, DegenerateFrameworkError) as exc:
        raise _bad_request(exc)
    return MotionsResponse(
        dof=k,
        basis=[[[rational_to_str(c) for c in triple] for triple in q] for q in basis],
    )


@app.post("/verify", response_model=VerifyResponse)
def verify(req: VerifyRequest) -> VerifyResponse:
    try:
        report = run_suite(req.suite, req.trials, req.seed)
    except KeyError as exc:
        raise _bad_request(exc)
    return VerifyResponse(
        suite=report["suite"],
        trials=report["trials"],
        seed=report["seed"],
        passed=report["pass"],
        counterexamples=report["counterexamples"],
    )


@app.post("/projective/map4", response_model=Map4Response)
def projective_map4(req: Map4Request) -> Map4Response:
    try:
        pts = [(Q(x), Q(y)) for x, y in req.points]
        m = four_point_projective_map(pts)
    except (ValueError, ZeroDivisionError) as exc:
        raise _bad_request(exc)
    return Map4Response(matrix=Mat3Model.from_matrix(m))


@app.post("/projective/apply", response_model=ApplyResponse)
def projective_apply(req: ApplyRequest) -> ApplyResponse:
    try:
        f = req.framework.to_framework()
        out = apply_projective(req.matrix.to_matrix(), f)
    except (ValueError, ZeroDivisionError) as exc:
        raise _bad_request(exc)
    return ApplyResponse(framework=FrameworkModel.from_framework(out))


@app.post("/projective/convert", response_model=ConvertResponse)
def projective_convert(req: ConvertRequest) -> ConvertResponse:
    try:
        src = req.src.to_framework()
        dst = req.dst.to_framework()
        a = req.matrix.to_matrix()
        q = [[Q(c) for c in triple] for triple in req.motion]
        out = convert_motion_pipeline(src.graph, src, dst, a, q)
        ok = is_motion(dst, out)
    except (ValueError, ZeroDivisionError) as exc:
        raise _bad_request(exc)
    return ConvertResponse(
        motion=[[rational_to_str(c) for c in triple] for triple in out],
        is_motion_of_dst=ok,
    )
