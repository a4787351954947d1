"""Command-line interface.

Exit codes: 0 pass, 1 fail, 2 inapplicable, 3 input error.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import Any, Sequence

import numpy as np

from . import __version__
from .corona import (
    MODEL_PAPER,
    MODEL_SEC3,
    MODELS,
    CoronaConfig,
    CoronaError,
    corona_adjacency_blocks,
    corona_combinatorial,
    corona_seidel_blocks,
    corona_two,
)
from .cospectral import (
    ADJACENCY,
    SEIDEL,
    SwitchingError,
    SwitchingPlan,
    certify_pair,
    check_switching_conditions,
    conjugation_identity,
    switch_edges,
)
from .hypergraph import HypergraphError, regularity
from .io import ParseError, dumps, format_hg, hypergraph_to_dict, read_hypergraph
from .isomorphism import DEFAULT_BUDGET
from .iterate import corona_hypergraph, corona_hypergraph_size, iterated_block_matrix, iterated_spectrum
from .linalg import adjacency_matrix, seidel_matrix
from .spectrum import DEFAULT_TOL, multisets_match, numeric_spectrum
from .theorems import InapplicableError
from .verify import FAIL, INAPPLICABLE, PASS, THEOREMS, verify

EXIT_PASS, EXIT_FAIL, EXIT_INAPPLICABLE, EXIT_INPUT = 0, 1, 2, 3
SCHEMA = 1


class InputError(Exception):
    pass


def _sha256(path: str | Path) -> str:
    return hashlib.sha256(Path(path).read_bytes()).hexdigest()


def _load_hypergraph(path: str):
    try:
        return read_hypergraph(path)
    except FileNotFoundError:
        raise InputError(f"{path}: no such file") from None
    except (ParseError, HypergraphError) as exc:
        raise InputError(str(exc)) from None


def _load_json(path: str) -> Any:
    try:
        return json.loads(Path(path).read_text(encoding="utf-8"))
    except FileNotFoundError:
        raise InputError(f"{path}: no such file") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}:{exc.lineno}: {exc.msg}") from None


def _load_config(path: str) -> CoronaConfig:
    data = _load_json(path)
    try:
        return CoronaConfig.from_dict(data, Path(path).parent)
    except FileNotFoundError as exc:
        raise InputError(f"{path}: referenced file not found: {exc.filename}") from None
    except (ParseError, HypergraphError) as exc:
        raise InputError(f"{path}: {exc}") from None


def _report(command: str, inputs: dict[str, str], payload: dict, model: str | None = None) -> dict:
    out = {"schema": SCHEMA, "command": command, "inputs": inputs, "results": payload}
    if model is not None:
        out["model"] = model
    return out


def _spectrum_payload(M: np.ndarray, tol: float) -> dict:
    spec = numeric_spectrum(M, tol)
    return {
        "order": spec.order,
        "char_poly": spec.char_poly.to_json(),
        "char_poly_text": spec.char_poly.pretty(),
        "det_M_minus_xI_text": (-spec.char_poly if spec.order % 2 else spec.char_poly).pretty(),
        "spectrum": spec.to_json(),
        "max_residual": float(f"{spec.max_residual:.6g}"),
        "certified": spec.certified(tol),
    }


def _matrix_of(H, kind: str) -> np.ndarray:
    return adjacency_matrix(H) if kind == ADJACENCY else seidel_matrix(H)


def _table(payload: dict) -> str:
    lines = [f"char poly: {payload['char_poly_text']}", f"{'eigenvalue':>22}  {'mult':>4}  exact"]
    for e in payload["spectrum"]:
        exact = e.get("exact", {}).get("text", "")
        lines.append(f"{e['value']:>22.12g}  {e['multiplicity']:>4}  {exact}")
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------


def cmd_spectrum(args) -> tuple[int, Any]:
    H = _load_hypergraph(args.file)
    payload = _spectrum_payload(_matrix_of(H, args.matrix), args.tol)
    payload["matrix"] = args.matrix
    if args.format == "table":
        return EXIT_PASS, _table(payload)
    return EXIT_PASS, _report("spectrum", {args.file: _sha256(args.file)}, payload)


def _corona_matrices(cfg: CoronaConfig, model: str) -> tuple[np.ndarray, np.ndarray]:
    """Adjacency and Seidel matrices under ``model``.

    Two-hypergraph coronas use the attachment-vertex-major order for both
    models so they can be compared entrywise; other configs only exist in
    the ``sec3`` model.
    """
    if cfg.is_two_corona():
        return corona_two(cfg.base, cfg.attachments[0], model)
    if model == MODEL_PAPER:
        raise InapplicableError("the paper4 model needs p = 1 and a single attached hypergraph")
    return corona_adjacency_blocks(cfg), corona_seidel_blocks(cfg)


def cmd_corona(args) -> tuple[int, Any]:
    cfg = _load_config(args.config)
    inputs = {args.config: _sha256(args.config)}
    if args.emit == "hg":
        res = corona_combinatorial(cfg)
        if args.format == "text":
            return EXIT_PASS, format_hg(res.hypergraph).rstrip("\n")
        payload = {"hypergraph": hypergraph_to_dict(res.hypergraph), "vertex_map": [list(v) for v in res.vertex_map]}
        return EXIT_PASS, _report("corona", inputs, payload)
    A, S = _corona_matrices(cfg, args.model)
    M = A if args.matrix == ADJACENCY else S
    if args.emit == "matrix":
        payload = {"matrix": args.matrix, "order": int(M.shape[0]), "entries": M.tolist()}
    else:
        payload = _spectrum_payload(M, args.tol)
        payload["matrix"] = args.matrix
    return EXIT_PASS, _report("corona", inputs, payload, args.model)


def _verify_one(job: tuple[str, str, float]) -> dict:
    theorem, path, tol = job
    try:
        cfg = _load_config(path)
    except InputError as exc:
        return {"theorem": theorem, "config": path, "status": "input-error", "error": str(exc)}
    out = verify(theorem, cfg, tol).to_json()
    out["config"] = path
    return out


def _verify_switching(args) -> tuple[int, Any]:
    if not args.input or not args.plan:
        raise InputError("switching verification needs --input and --plan")
    H = _load_hypergraph(args.input)
    plan = _load_plan(args.plan)
    inputs = {args.input: _sha256(args.input), args.plan: _sha256(args.plan)}
    try:
        report = check_switching_conditions(H, plan)
    except SwitchingError as exc:
        raise InputError(str(exc)) from None
    payload: dict[str, Any] = {"theorem": "switching", "conditions": report.to_json()}
    if not report.admissible:
        payload["status"] = INAPPLICABLE
        return EXIT_INAPPLICABLE, _report("verify", inputs, payload)
    Hs = switch_edges(H, plan)
    cert = certify_pair(H, Hs, SEIDEL, args.budget)
    conj = conjugation_identity(H, plan, Hs)
    ok = cert.cospectral and conj
    payload.update(
        {
            "status": PASS if ok else FAIL,
            "match": ok,
            "conjugation_identity": conj,
            "certificate": cert.to_json(),
        }
    )
    return (EXIT_PASS if ok else EXIT_FAIL), _report("verify", inputs, payload)


def cmd_verify(args) -> tuple[int, Any]:
    if args.theorem == "switching":
        return _verify_switching(args)
    if not args.config:
        raise InputError("verify needs at least one --config")
    jobs = [(args.theorem, path, args.tol) for path in args.config]
    if args.jobs > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(_verify_one, jobs))
    else:
        results = [_verify_one(j) for j in jobs]
    statuses = {r["status"] for r in results}
    if "input-error" in statuses:
        code = EXIT_INPUT
    elif FAIL in statuses:
        code = EXIT_FAIL
    elif INAPPLICABLE in statuses:
        code = EXIT_INAPPLICABLE
    else:
        code = EXIT_PASS
    inputs = {p: _sha256(p) for p in args.config if Path(p).exists()}
    payload: Any = results[0] if len(results) == 1 else results
    return code, _report("verify", inputs, payload)


def cmd_corona_iter(args) -> tuple[int, Any]:
    G0 = _load_hypergraph(args.base)
    inputs = {args.base: _sha256(args.base)}
    if args.depth < 1:
        raise InputError("--depth must be at least 1")
    if args.emit == "hg":
        return EXIT_PASS, format_hg(corona_hypergraph(G0, args.depth)).rstrip("\n")
    r = regularity(G0)
    if args.emit == "spectrum":
        if r is None:
            raise InapplicableError("the closed-form iterated spectrum needs a regular base")
        it = iterated_spectrum(numeric_spectrum(adjacency_matrix(G0), args.tol), r, G0.k, G0.n, args.depth)
        return EXIT_PASS, _report("corona-iter", inputs, it.to_json(), MODEL_PAPER)
    H = corona_hypergraph(G0, args.depth)
    size = corona_hypergraph_size(G0, args.depth, H)
    payload: dict[str, Any] = {"depth": args.depth, "order": H.n, "size": size.to_json()}
    code = EXIT_PASS
    if r is None:
        payload["spectrum_check"] = {"status": INAPPLICABLE, "reason": "base is not regular"}
    else:
        it = iterated_spectrum(numeric_spectrum(adjacency_matrix(G0), args.tol), r, G0.k, G0.n, args.depth)
        w = np.linalg.eigvalsh(iterated_block_matrix(G0, args.depth).astype(float))
        ok, dev = multisets_match(it.values(), list(w), args.tol)
        payload["spectrum_check"] = {"status": PASS if ok else FAIL, "max_deviation": float(f"{dev:.6g}"), "order": it.order}
        code = EXIT_PASS if ok else EXIT_FAIL
    return code, _report("corona-iter", inputs, payload, MODEL_PAPER)


def _load_plan(path: str) -> SwitchingPlan:
    try:
        return SwitchingPlan.from_dict(_load_json(path))
    except (SwitchingError, TypeError, ValueError) as exc:
        raise InputError(f"{path}: {exc}") from None


def cmd_switch(args) -> tuple[int, Any]:
    H = _load_hypergraph(args.input)
    plan = _load_plan(args.plan)
    inputs = {args.input: _sha256(args.input), args.plan: _sha256(args.plan)}
    try:
        report = check_switching_conditions(H, plan)
    except SwitchingError as exc:
        raise InputError(str(exc)) from None
    if not report.admissible:
        return EXIT_INAPPLICABLE, _report("switch", inputs, {"conditions": report.to_json(), "status": INAPPLICABLE})
    Hs = switch_edges(H, plan)
    cert = certify_pair(H, Hs, SEIDEL, args.budget)
    payload = {
        "conditions": report.to_json(),
        "conjugation_identity": conjugation_identity(H, plan, Hs),
        "certificate": cert.to_json(),
    }
    if args.emit:
        out = Path(args.emit)
        out.mkdir(parents=True, exist_ok=True)
        stem = Path(args.input).stem
        (out / f"{stem}_switched.hg").write_text(format_hg(Hs), encoding="utf-8")
        (out / "certificate.json").write_text(dumps(_report("switch", inputs, payload)) + "\n", encoding="utf-8")
        payload["written"] = [str(out / f"{stem}_switched.hg"), str(out / "certificate.json")]
    ok = cert.cospectral and payload["conjugation_identity"]
    return (EXIT_PASS if ok else EXIT_FAIL), _report("switch", inputs, payload)


def cmd_certify(args) -> tuple[int, Any]:
    A, B = _load_hypergraph(args.first), _load_hypergraph(args.second)
    cert = certify_pair(A, B, args.kind, args.budget)
    inputs = {args.first: _sha256(args.first), args.second: _sha256(args.second)}
    return (EXIT_PASS if cert.cospectral else EXIT_FAIL), _report("certify", inputs, cert.to_json())


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hypercorona", description="Spectra of hypergraph coronas and cospectral constructions.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tol", type=float, default=DEFAULT_TOL, help="numeric tolerance (default 1e-8)")
    common.add_argument("--timing", action="store_true", help="add wall time to the report (breaks byte-identical output)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("spectrum", parents=[common], help="exact char poly and grouped spectrum of a hypergraph")
    p.add_argument("file")
    p.add_argument("--matrix", choices=(ADJACENCY, SEIDEL), default=ADJACENCY)
    p.add_argument("--format", choices=("json", "table"), default="json")
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("corona", parents=[common], help="build a corona from a config")
    p.add_argument("--config", required=True)
    p.add_argument("--model", choices=MODELS, default=MODEL_SEC3)
    p.add_argument("--matrix", choices=(ADJACENCY, SEIDEL), default=ADJACENCY)
    p.add_argument("--emit", choices=("hg", "matrix", "spectrum"), default="spectrum")
    p.add_argument("--format", choices=("json", "text"), default="json", help="for --emit hg: JSON report or .hg text")
    p.set_defaults(func=cmd_corona)

    p = sub.add_parser("verify", parents=[common], help="check a closed form against its oracle")
    p.add_argument("--theorem", required=True, choices=THEOREMS + ("switching",))
    p.add_argument("--config", action="append", help="corona config JSON (repeatable)")
    p.add_argument("--input", help="hypergraph for --theorem switching")
    p.add_argument("--plan", help="switching plan JSON for --theorem switching")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="isomorphism search node budget")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("corona-iter", parents=[common], help="iterated corona of a hypergraph with itself")
    p.add_argument("--base", required=True)
    p.add_argument("--depth", type=int, required=True)
    p.add_argument("--emit", choices=("hg", "spectrum", "report"), default="report")
    p.set_defaults(func=cmd_corona_iter)

    p = sub.add_parser("switch", parents=[common], help="apply a Seidel switching plan and certify the pair")
    p.add_argument("--input", required=True)
    p.add_argument("--plan", required=True)
    p.add_argument("--emit", help="directory for the switched hypergraph and certificate")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.set_defaults(func=cmd_switch)

    p = sub.add_parser("certify", parents=[common], help="certify two hypergraphs as cospectral")
    p.add_argument("--kind", choices=(ADJACENCY, SEIDEL), default=ADJACENCY)
    p.add_argument("first")
    p.add_argument("second")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.set_defaults(func=cmd_certify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on bad usage; that code means "inapplicable" here
        return EXIT_PASS if exc.code == 0 else EXIT_INPUT
    start = time.perf_counter()
    try:
        code, out = args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except InapplicableError as exc:
        code, out = EXIT_INAPPLICABLE, {"schema": SCHEMA, "command": args.command, "status": INAPPLICABLE, "reason": str(exc)}
    except (CoronaError, HypergraphError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    if isinstance(out, dict):
        if args.timing:
            out["wall_time_s"] = round(time.perf_counter() - start, 6)
        print(dumps(out))
    else:
        print(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
