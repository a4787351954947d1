"""Closed form versus brute-force oracle, one report per theorem."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Callable

import numpy as np

from .corona import (
    MODEL_PAPER,
    MODEL_SEC3,
    CoronaConfig,
    CoronaError,
    binom,
    corona_adjacency_blocks,
    corona_combinatorial,
    corona_seidel_blocks,
    corona_two,
)
from .hypergraph import HypergraphError, complete_hypergraph, regularity
from .linalg import adjacency_matrix, char_poly, coronal, seidel_matrix
from .poly import IntPolynomial
from .spectrum import DEFAULT_TOL, multisets_match, numeric_spectrum
from .theorems import (
    ClosedFormSpectrum,
    InapplicableError,
    charpoly_cor32,
    charpoly_generalized_adjacency,
    charpoly_generalized_seidel,
    charpoly_seidel_p1,
    charpoly_via_coronal,
    corona_two_eigenpairs,
    seidel_spectrum_corona_two,
    spectrum_corona_complete,
    spectrum_corona_two,
)

PASS, FAIL, INAPPLICABLE = "pass", "fail", "inapplicable"
THEOREMS = ("3.1", "3.2", "seidel-gen", "seidel-p1", "4.1", "4.2", "seidel-4", "coronal")


@dataclass
class VerifyReport:
    theorem: str
    model: str | None
    status: str
    lhs: Any = None
    rhs: Any = None
    max_residual: float | None = None
    details: dict = field(default_factory=dict)

    @property
    def match(self) -> bool:
        return self.status == PASS

    def to_json(self) -> dict:
        out = {
            "theorem": self.theorem,
            "model": self.model,
            "status": self.status,
            "match": self.match,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "maxResidual": None if self.max_residual is None else float(f"{self.max_residual:.6g}"),
        }
        if self.details:
            out["details"] = self.details
        return out


def _poly_json(P: IntPolynomial) -> dict:
    return {"coefficients": P.to_json(), "text": P.pretty()}


def _poly_report(theorem: str, model: str, lhs: IntPolynomial, rhs: IntPolynomial, **details) -> VerifyReport:
    status = PASS if lhs == rhs else FAIL
    return VerifyReport(theorem, model, status, _poly_json(lhs), _poly_json(rhs), 0.0 if status == PASS else None, details)


def _values_json(vals) -> list[float]:
    return [float(f"{v:.12g}") + 0.0 for v in sorted(vals, reverse=True)]


def _spectrum_report(
    theorem: str, model: str, closed: ClosedFormSpectrum, M: np.ndarray, tol: float, **details
) -> VerifyReport:
    num = numeric_spectrum(M, tol)
    ok, dev = multisets_match(closed.values(), num.values(), tol)
    details.setdefault("order", closed.order)
    details["closed_form"] = closed.to_json()
    return VerifyReport(theorem, model, PASS if ok else FAIL, _values_json(closed.values()), _values_json(num.values()), dev, details)


def _require_p1(cfg: CoronaConfig) -> None:
    if cfg.p != 1:
        raise InapplicableError(f"needs p = 1, got p = {cfg.p}")


def _require_two(cfg: CoronaConfig):
    if not cfg.is_two_corona():
        raise InapplicableError("needs p = 1 and a single attached hypergraph")
    G1 = cfg.attachments[0]
    r = regularity(G1)
    if r is None:
        raise InapplicableError("the attached hypergraph must be regular")
    return cfg.base, G1, r


def _v31(cfg: CoronaConfig, tol: float) -> VerifyReport:
    lhs = charpoly_generalized_adjacency(cfg)
    B = corona_adjacency_blocks(cfg)
    rhs = char_poly(B).sign_normalized()
    comb = corona_combinatorial(cfg).hypergraph
    return _poly_report("3.1", MODEL_SEC3, lhs, rhs, blocks_equal_combinatorial=_blocks_vs_combinatorial(cfg, B, comb))


def _blocks_vs_combinatorial(cfg: CoronaConfig, B: np.ndarray, comb) -> bool:
    """Both builders lay copies out block by block, copy by copy, so no reordering is needed."""
    return bool(np.array_equal(B, adjacency_matrix(comb)))


def _v32(cfg: CoronaConfig, tol: float) -> VerifyReport:
    _require_p1(cfg)
    m, r = cfg.regular_parameters()
    P0 = char_poly(adjacency_matrix(cfg.base))
    atts = [char_poly(adjacency_matrix(G)) for G in cfg.attachments]
    rhs = char_poly(corona_adjacency_blocks(cfg)).sign_normalized()
    signs = {}
    for name, s in (("plus", 1), ("minus", -1)):
        rf = charpoly_cor32(P0, atts, r, cfg.k, m, cfg.n, c_sign=s)
        signs[name] = rf.is_polynomial() and rf.as_polynomial().sign_normalized() == rhs
    lhs = charpoly_cor32(P0, atts, r, cfg.k, m, cfg.n, c_sign=1)
    lhs_poly = lhs.as_polynomial().sign_normalized() if lhs.is_polynomial() else None
    if lhs_poly is None:
        return VerifyReport("3.2", MODEL_SEC3, FAIL, {"text": lhs.pretty()}, _poly_json(rhs), None, {"sign_matches": signs})
    return _poly_report("3.2", MODEL_SEC3, lhs_poly, rhs, sign_matches=signs, c=cfg.constants().c)


def _vsgen(cfg: CoronaConfig, tol: float) -> VerifyReport:
    lhs = charpoly_generalized_seidel(cfg)
    rhs = char_poly(corona_seidel_blocks(cfg)).sign_normalized()
    return _poly_report("seidel-gen", MODEL_SEC3, lhs, rhs)


def _vsp1(cfg: CoronaConfig, tol: float) -> VerifyReport:
    _require_p1(cfg)
    m, r = cfg.regular_parameters()
    r0 = regularity(cfg.base)
    if r0 is None:
        raise InapplicableError("the base hypergraph must be regular")
    Q0 = char_poly(seidel_matrix(cfg.base))
    Qs = [char_poly(seidel_matrix(G)) for G in cfg.attachments]
    lhs = charpoly_seidel_p1(Q0, Qs, r0, r, cfg.k, m, cfg.n)
    rhs = char_poly(corona_seidel_blocks(cfg)).sign_normalized()
    return _poly_report("seidel-p1", MODEL_SEC3, lhs, rhs)


def _v41(cfg: CoronaConfig, tol: float) -> VerifyReport:
    G0, G1, r = _require_two(cfg)
    k, m, n = G1.k, G1.n, G0.n
    A, _ = corona_two(G0, G1, MODEL_PAPER)
    s0 = numeric_spectrum(adjacency_matrix(G0), tol)
    s1 = numeric_spectrum(adjacency_matrix(G1), tol)
    closed = spectrum_corona_two(s0, s1, r, k, m)
    witnesses = corona_two_eigenpairs(G0, G1)
    wres = max((w.residual(A) for w in witnesses), default=0.0)
    rep = _spectrum_report("4.1", MODEL_PAPER, closed, A, tol, witnesses=len(witnesses), witness_max_residual=float(f"{wres:.6g}"))
    top = max(closed.pieces, key=lambda p: p.value)
    b = binom(m - 1, k - 2)
    perron_plus = (s0.radius + r * (k - 1) + np.sqrt((s0.radius - r * (k - 1)) ** 2 + 4 * m * b * b)) / 2
    rep.details["spectral_radius_branch_is_max"] = bool(top.construction == "lift+" and abs(top.value - perron_plus) <= tol * max(1.0, perron_plus))
    rep.details["order_ok"] = closed.order == n * (1 + m) == len(witnesses)
    if wres > tol or not rep.details["order_ok"] or not rep.details["spectral_radius_branch_is_max"]:
        rep.status = FAIL
    rep.max_residual = max(rep.max_residual or 0.0, wres)
    return rep


def _v42(cfg: CoronaConfig, tol: float) -> VerifyReport:
    G0, G1, _ = _require_two(cfg)
    m = G1.n
    if G1.k != m or G1 != complete_hypergraph(m, m):
        raise InapplicableError("needs the attached hypergraph to be K_m^m")
    A, _ = corona_two(G0, G1, MODEL_PAPER)
    closed = spectrum_corona_complete(numeric_spectrum(adjacency_matrix(G0), tol), m)
    return _spectrum_report("4.2", MODEL_PAPER, closed, A, tol)


def _vs4(cfg: CoronaConfig, tol: float) -> VerifyReport:
    G0, G1, r1 = _require_two(cfg)
    r0 = regularity(G0)
    if r0 is None:
        raise InapplicableError("the base hypergraph must be regular")
    _, S = corona_two(G0, G1, MODEL_PAPER)
    closed = seidel_spectrum_corona_two(
        numeric_spectrum(seidel_matrix(G0), tol), numeric_spectrum(seidel_matrix(G1), tol), r0, r1, G1.k, G1.n
    )
    return _spectrum_report("seidel-4", MODEL_PAPER, closed, S, tol)


def _vcoronal(cfg: CoronaConfig, tol: float) -> VerifyReport:
    G0, G1, _ = _require_two(cfg)
    A, _ = corona_two(G0, G1, MODEL_PAPER)
    A1 = adjacency_matrix(G1)
    chi = coronal(A1)
    lhs = charpoly_via_coronal(char_poly(adjacency_matrix(G0)), char_poly(A1), chi, binom(G1.n - 1, G1.k - 2), G0.n)
    rhs = char_poly(A).sign_normalized()
    return _poly_report("coronal", MODEL_PAPER, lhs, rhs, coronal=chi.pretty())


_HANDLERS: dict[str, Callable[[CoronaConfig, float], VerifyReport]] = {
    "3.1": _v31,
    "3.2": _v32,
    "seidel-gen": _vsgen,
    "seidel-p1": _vsp1,
    "4.1": _v41,
    "4.2": _v42,
    "seidel-4": _vs4,
    "coronal": _vcoronal,
}

_MODELS = {"3.1": MODEL_SEC3, "3.2": MODEL_SEC3, "seidel-gen": MODEL_SEC3, "seidel-p1": MODEL_SEC3}


def verify(theorem: str, cfg: CoronaConfig, tol: float = DEFAULT_TOL) -> VerifyReport:
    """Run one closed form against its oracle; hypothesis failures give ``inapplicable``."""
    if theorem not in _HANDLERS:
        raise ValueError(f"unknown theorem {theorem!r}; expected one of {THEOREMS}")
    try:
        return _HANDLERS[theorem](cfg, tol)
    except (InapplicableError, CoronaError, HypergraphError) as exc:
        return VerifyReport(theorem, _MODELS.get(theorem, MODEL_PAPER), INAPPLICABLE, details={"reason": str(exc)})


def adjudicate_p1_sign(configs) -> dict:
    """Count, over p = 1 configs, how often each leading-factor sign matches the oracle."""
    counts = {"plus": 0, "minus": 0, "instances": 0, "instances_with_c_nonzero": 0}
    for cfg in configs:
        rep = _v32(cfg, DEFAULT_TOL)
        counts["instances"] += 1
        if cfg.constants().c:
            counts["instances_with_c_nonzero"] += 1
        for name, ok in rep.details["sign_matches"].items():
            counts[name] += bool(ok)
    n = counts["instances"]
    counts["exact_sign"] = [s for s in ("plus", "minus") if counts[s] == n and n]
    return counts
