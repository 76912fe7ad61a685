"""Command-line client for the rigidity service.

By default commands talk to an in-process ASGI instance of the service, so no
server needs to run; pass --server URL to target a remote instance instead.
Exit codes: 0 success (and verification passed), 1 verification failure,
2 input or transport error.
"""

from __future__ import annotations

import json
import sys
from pathlib import Path

import click
import httpx

from .io import dump_report, framework_to_json_obj, parse_framework, parse_graph
from .matroid import DEFAULT_MASTER_SEED

INPUT_ERROR = 2
VERIFY_FAILURE = 1


def make_client(server: str | None) -> httpx.Client:
    if server:
        return httpx.Client(base_url=server, timeout=300.0)
    # In-process: drive the ASGI app through the sync test client shim.
    import warnings

    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        from starlette.testclient import TestClient

    from .service.app import app

    return TestClient(app)


def _post(client: httpx.Client, path: str, payload: dict) -> dict:
    try:
        resp = client.post(path, json=payload)
    except httpx.HTTPError as exc:
        click.echo(f"error: transport failure: {exc}", err=True)
        sys.exit(INPUT_ERROR)
    if resp.status_code != 200:
        try:
            detail = resp.json().get("detail", resp.text)
        except ValueError:
            detail = resp.text
        click.echo(f"error: {detail}", err=True)
        sys.exit(INPUT_ERROR)
    return resp.json()


def _read_file(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        click.echo(f"error: cannot read {path}: {exc}", err=True)
        sys.exit(INPUT_ERROR)


def _load_graph(path: str):
    try:
        return parse_graph(_read_file(path))
    except (ValueError, KeyError, json.JSONDecodeError) as exc:
        click.echo(f"error: cannot parse graph {path}: {exc}", err=True)
        sys.exit(INPUT_ERROR)


def _load_framework(path: str):
    try:
        return parse_framework(_read_file(path))
    except (ValueError, KeyError, json.JSONDecodeError) as exc:
        click.echo(f"error: cannot parse framework {path}: {exc}", err=True)
        sys.exit(INPUT_ERROR)


def _emit(report: dict, as_json: bool, lines: list[str]) -> None:
    if as_json:
        click.echo(dump_report(report), nl=False)
    else:
        for line in lines:
            click.echo(line)


@click.group()
@click.option("--server", default=None, help="Base URL of a running service; default is in-process.")
@click.pass_context
def main(ctx: click.Context, server: str | None) -> None:
    """Exact queries on the generic cofactor rigidity matroid."""
    ctx.obj = {"server": server}


@main.command()
@click.argument("graph_file", type=click.Path())
@click.option("--seed", type=int, default=DEFAULT_MASTER_SEED, show_default=True)
@click.option("--json", "as_json", is_flag=True, help="Emit the full JSON report.")
@click.pass_context
def rank(ctx: click.Context, graph_file: str, seed: int, as_json: bool) -> None:
    """Rank, independence, rigidity and degrees of freedom of a graph."""
    g = _load_graph(graph_file)
    payload = {"graph": {"n": g.n, "edges": g.sorted_edges()}, "seed": seed}
    with make_client(ctx.obj["server"]) as client:
        res = _post(client, "/rank", payload)
    report = {
        "command": "rank",
        "inputs": {"graph": payload["graph"], "seed": seed},
        "results": {k: res[k] for k in ("rank", "independent", "rigid", "dof")},
        "certificates": res["certificate"],
        "pass": True,
    }
    _emit(
        report,
        as_json,
        [
            f"rank {res['rank']}",
            f"independent {str(res['independent']).lower()}",
            f"rigid {str(res['rigid']).lower()}",
            f"dof {res['dof']}",
        ],
    )


@main.command()
@click.argument("graph_file", type=click.Path())
@click.argument("edges", required=False, default="")
@click.option("--seed", type=int, default=DEFAULT_MASTER_SEED, show_default=True)
@click.option("--json", "as_json", is_flag=True)
@click.pass_context
def closure(ctx: click.Context, graph_file: str, edges: str, seed: int, as_json: bool) -> None:
    """Closure of an edge set (format: "0-1,2-3"; empty = all graph edges)."""
    g = _load_graph(graph_file)
    if edges:
        try:
            edge_list = [
                tuple(sorted(int(x) for x in part.split("-"))) for part in edges.split(",")
            ]
        except ValueError:
            click.echo(f"error: cannot parse edge list {edges!r}", err=True)
            sys.exit(INPUT_ERROR)
    else:
        edge_list = g.sorted_edges()
    payload = {
        "graph": {"n": g.n, "edges": g.sorted_edges()},
        "edges": edge_list,
        "seed": seed,
    }
    with make_client(ctx.obj["server"]) as client:
        res = _post(client, "/closure", payload)
    report = {
        "command": "closure",
        "inputs": {"graph": payload["graph"], "edges": edge_list, "seed": seed},
        "results": {"rank": res["rank"], "closure": res["closure"]},
        "certificates": res["certificate"],
        "pass": True,
    }
    _emit(report, as_json, [f"rank {res['rank']}"] + [f"{u} {v}" for u, v in res["closure"]])


@main.command()
@click.argument("framework_file", type=click.Path())
@click.option("--pins", required=True, help="Three pinned vertices, e.g. 0,1,2.")
@click.option("--json", "as_json", is_flag=True)
@click.pass_context
def motions(ctx: click.Context, framework_file: str, pins: str, as_json: bool) -> None:
    """Degrees of freedom and a basis of pinned nontrivial motions."""
    f = _load_framework(framework_file)
    try:
        a, b, c = (int(x) for x in pins.split(","))
    except ValueError:
        click.echo(f"error: cannot parse pins {pins!r} (expected a,b,c)", err=True)
        sys.exit(INPUT_ERROR)
    payload = {"framework": framework_to_json_obj(f), "pins": [a, b, c]}
    with make_client(ctx.obj["server"]) as client:
        res = _post(client, "/motions", payload)
    report = {
        "command": "motions",
        "inputs": {"framework": payload["framework"], "pins": [a, b, c]},
        "results": {"dof": res["dof"], "basis": res["basis"]},
        "certificates": {},
        "pass": True,
    }
    lines = [f"dof {res['dof']}"]
    for i, q in enumerate(res["basis"]):
        lines.append(f"motion {i}: " + " ".join("(" + ",".join(t) + ")" for t in q))
    _emit(report, as_json, lines)


@main.command()
@click.argument("suite")
@click.option("--trials", type=int, default=None, help="Trial count (suite default if omitted).")
@click.option("--seed", type=int, default=DEFAULT_MASTER_SEED, show_default=True)
@click.option("--json", "as_json", is_flag=True)
@click.pass_context
def verify(ctx: click.Context, suite: str, trials: int | None, seed: int, as_json: bool) -> None:
    """Run a named verification suite (or 'all')."""
    from .verify import SUITES

    names = sorted(SUITES) if suite == "all" else [suite]
    reports = []
    with make_client(ctx.obj["server"]) as client:
        for name in names:
            payload = {"suite": name, "seed": seed}
            if trials is not None:
                payload["trials"] = trials
            reports.append(_post(client, "/verify", payload))
    all_pass = all(r["passed"] for r in reports)
    report = {
        "command": "verify",
        "inputs": {"suite": suite, "trials": trials, "seed": seed},
        "results": reports,
        "certificates": {"seed": seed},
        "pass": all_pass,
    }
    lines = [
        f"{r['suite']}: {'pass' if r['passed'] else 'FAIL'} ({r['trials']} trials)"
        + ("" if r["passed"] else f" counterexamples: {json.dumps(r['counterexamples'])}")
        for r in reports
    ]
    _emit(report, as_json, lines)
    if not all_pass:
        sys.exit(VERIFY_FAILURE)


@main.group()
def projective() -> None:
    """Homographies and projective motion transport."""


@projective.command()
@click.argument("points", nargs=4)
@click.option("--json", "as_json", is_flag=True)
@click.pass_context
def map4(ctx: click.Context, points: tuple[str, ...], as_json: bool) -> None:
    """Homography sending four points 'x,y' to (1,0),(0,0),(0,1),(1,1)."""
    try:
        pts = [tuple(p.split(",")) for p in points]
        if any(len(p) != 2 for p in pts):
            raise ValueError("each point must be x,y")
    except ValueError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(INPUT_ERROR)
    payload = {"points": pts}
    with make_client(ctx.obj["server"]) as client:
        res = _post(client, "/projective/map4", payload)
    report = {
        "command": "projective map4",
        "inputs": {"points": pts},
        "results": {"matrix": res["matrix"]["rows"]},
        "certificates": {},
        "pass": True,
    }
    _emit(report, as_json, [" ".join(row) for row in res["matrix"]["rows"]])


@projective.command(name="apply")
@click.argument("matrix_file", type=click.Path())
@click.argument("framework_file", type=click.Path())
@click.option("--json", "as_json", is_flag=True)
@click.pass_context
def apply_cmd(ctx: click.Context, matrix_file: str, framework_file: str, as_json: bool) -> None:
    """Apply a 3x3 projective matrix (JSON file) to a framework."""
    try:
        rows = json.loads(_read_file(matrix_file))
    except json.JSONDecodeError as exc:
        click.echo(f"error: cannot parse matrix {matrix_file}: {exc}", err=True)
        sys.exit(INPUT_ERROR)
    f = _load_framework(framework_file)
    payload = {"matrix": {"rows": rows}, "framework": framework_to_json_obj(f)}
    with make_client(ctx.obj["server"]) as client:
        res = _post(client, "/projective/apply", payload)
    report = {
        "command": "projective apply",
        "inputs": {"matrix": rows, "framework": payload["framework"]},
        "results": {"framework": res["framework"]},
        "certificates": {},
        "pass": True,
    }
    lines = [f"{x} {y}" for x, y in res["framework"]["coords"]]
    _emit(report, as_json, lines)


@projective.command()
@click.argument("matrix_file", type=click.Path())
@click.argument("src_file", type=click.Path())
@click.argument("dst_file", type=click.Path())
@click.argument("motion_file", type=click.Path())
@click.option("--json", "as_json", is_flag=True)
@click.pass_context
def convert(
    ctx: click.Context,
    matrix_file: str,
    src_file: str,
    dst_file: str,
    motion_file: str,
    as_json: bool,
) -> None:
    """Transport a motion (JSON list of per-vertex triples) from src to dst."""
    try:
        rows = json.loads(_read_file(matrix_file))
        motion = json.loads(_read_file(motion_file))
    except json.JSONDecodeError as exc:
        click.echo(f"error: cannot parse input: {exc}", err=True)
        sys.exit(INPUT_ERROR)
    src = _load_framework(src_file)
    dst = _load_framework(dst_file)
    payload = {
        "src": framework_to_json_obj(src),
        "dst": framework_to_json_obj(dst),
        "matrix": {"rows": rows},
        "motion": motion,
    }
    with make_client(ctx.obj["server"]) as client:
        res = _post(client, "/projective/convert", payload)
    report = {
        "command": "projective convert",
        "inputs": {"matrix": rows, "motion": motion},
        "results": {"motion": res["motion"], "is_motion_of_dst": res["is_motion_of_dst"]},
        "certificates": {},
        "pass": res["is_motion_of_dst"],
    }
    lines = [" ".join(t) for t in res["motion"]]
    _emit(report, as_json, lines)
    if not res["is_motion_of_dst"]:
        sys.exit(VERIFY_FAILURE)


if __name__ == "__main__":
    main()
