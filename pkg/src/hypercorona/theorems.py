"""Closed-form characteristic polynomials and spectra of hypergraph coronas.

Every evaluator is tagged with the matrix model it is exact for:

* generalized adjacency / Seidel formulas and the p = 1 specialisations hold
  for the ``sec3`` block matrices (the corona's true adjacency);
* the two-hypergraph eigenpair formulas, the complete-attachment corollary,
  the Seidel quotient formula and the coronal factorization hold for the
  ``paper4`` block matrices.

Characteristic polynomials follow the ``det(M - x I)`` convention on input;
returned polynomials are sign-normalised (positive leading coefficient)
unless stated otherwise.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import numpy as np

from .corona import (
    MODEL_PAPER,
    CoronaConfig,
    CoronaError,
    binom,
    corona_constants,
)
from .hypergraph import Hypergraph, regularity
from .linalg import adjacency_matrix, char_poly, poly_det, seidel_matrix
from .poly import IntPolynomial, RationalFunction
from .spectrum import Eigenvalue, ExactValue, Spectrum, exact_float, exact_to_json, surd, symmetric_eigh

X = IntPolynomial.x()


class InapplicableError(CoronaError):
    """The inputs violate a hypothesis of the closed form being evaluated."""


# ---------------------------------------------------------------------------
# characteristic polynomials
# ---------------------------------------------------------------------------


def _same_block(cfg: CoronaConfig) -> list[list[bool]]:
    owner = cfg.partition.block_of()
    return [[owner[u] == owner[v] for v in range(cfg.n)] for u in range(cfg.n)]


def _regular(cfg: CoronaConfig) -> tuple[int, int]:
    try:
        return cfg.regular_parameters()
    except CoronaError as exc:
        raise InapplicableError(str(exc)) from None


def charpoly_generalized_adjacency(cfg: CoronaConfig) -> IntPolynomial:
    """Adjacency char poly of a generalized corona via the block-determinant formula.

    ``(prod_i det(Y_i - x))^p * det(A(G0) + I_t (x) ((a - b^2 p m / d) J_p - (a + x) I_p))``
    with ``d = r(k-1) + c(m-1) - x``. The inner determinant is taken over
    Z[x] after scaling by ``d``.
    """
    m, r = _regular(cfg)
    k, p, n = cfg.k, cfg.p, cfg.n
    const = corona_constants(p, m, k)
    a, b, c = const.a, const.b, const.c
    d = IntPolynomial([r * (k - 1) + c * (m - 1), -1])
    off_diag = np.ones((m, m), dtype=np.int64) - np.eye(m, dtype=np.int64)
    prod = IntPolynomial([1])
    for G in cfg.attachments:
        prod = prod * char_poly(adjacency_matrix(G) + c * off_diag)
    prod = prod ** p
    A0 = adjacency_matrix(cfg.base)
    same = _same_block(cfg)
    coupling = a * d - b * b * p * m
    rows = []
    for u in range(n):
        row = []
        for v in range(n):
            e = d * int(A0[u, v])
            if same[u][v]:
                e = e + coupling
            if u == v:
                e = e - (X + a) * d
            row.append(e)
        rows.append(row)
    inner = poly_det(rows)
    return (prod * inner).exquo(d ** n).sign_normalized()


def charpoly_generalized_seidel(cfg: CoronaConfig) -> IntPolynomial:
    """Seidel char poly of a generalized corona via the block-determinant formula.

    ``(1 + pmt/h) (prod_i det(Y_Si - J - x))^p det(S(G0) + I_t (x) (-(2a + 4pmb^2/h) J_p
    + (2a - x) I_p) - (pm/h)((t - 4b) - pm(t - 2b)^2/(h + pmt)) J_n)``
    with ``h = -(1 + 2r(k-1) + 2c(m-1) + x)``.
    """
    m, r = _regular(cfg)
    k, p, n, t = cfg.k, cfg.p, cfg.n, cfg.t
    const = corona_constants(p, m, k, r)
    a, b, c, h = const.a, const.b, const.c, const.h
    N = p * m * t
    hN = h + N
    off_diag = np.ones((m, m), dtype=np.int64) - np.eye(m, dtype=np.int64)
    J = np.ones((m, m), dtype=np.int64)
    prod = IntPolynomial([1])
    for G in cfg.attachments:
        prod = prod * char_poly(seidel_matrix(G) - 2 * c * off_diag - J)
    prod = prod ** p
    S0 = seidel_matrix(cfg.base)
    same = _same_block(cfg)
    hh = h * hN
    block_term = hh * (2 * a) + hN * (4 * p * m * b * b)
    all_term = hN * (p * m * (t - 4 * b)) - p * p * m * m * (t - 2 * b) ** 2
    rows = []
    for u in range(n):
        row = []
        for v in range(n):
            e = hh * int(S0[u, v]) - all_term
            if same[u][v]:
                e = e - block_term
            if u == v:
                e = e + hh * (IntPolynomial([2 * a, -1]))
            row.append(e)
        rows.append(row)
    inner = poly_det(rows)
    num = hN * prod * inner
    return num.exquo(h ** (n + 1) * hN ** n).sign_normalized()


def _as_charpoly(spec_or_poly, order: int | None = None) -> IntPolynomial:
    """``det(M - xI)`` from a Spectrum (monic backing) or a polynomial as given."""
    if isinstance(spec_or_poly, Spectrum):
        P = spec_or_poly.char_poly
        if P is None:
            raise ValueError("spectrum has no exact characteristic polynomial")
        n = spec_or_poly.order
        P = P.sign_normalized()
        P = -P if n % 2 else P
    else:
        P = spec_or_poly
    if order is not None and P.degree != order:
        raise ValueError(f"characteristic polynomial has degree {P.degree}, expected {order}")
    return P


def charpoly_cor32(
    G0spec,
    attachment_specs: Sequence,
    r: int,
    k: int,
    m: int,
    n: int,
    c_sign: int = 1,
) -> RationalFunction:
    """The p = 1, t = n product form from base and attachment spectra.

    ``(r(k-1) + c_sign*c(m-1) - x)^n * prod_i prod_{j>=2} (lambda_j^(i) - c - x)
    * prod_i (lambda'_i + (x^2 - R x - b^2 m)/(R - x))`` with
    ``R = r(k-1) + c(m-1)``. Only ``c_sign = +1`` is a polynomial identity in
    general; the result is returned as a rational function so either sign
    can be compared.
    """
    if len(attachment_specs) != n:
        raise ValueError(f"expected {n} attachment spectra, got {len(attachment_specs)}")
    const = corona_constants(1, m, k)
    b, c = const.b, const.c
    P0 = _as_charpoly(G0spec, n)
    perron = r * (k - 1)
    R = perron + c * (m - 1)
    total = RationalFunction(IntPolynomial([perron + c_sign * c * (m - 1), -1]) ** n)
    for spec in attachment_specs:
        Pi = _as_charpoly(spec, m)
        if Pi(perron) != 0:
            raise InapplicableError(f"r(k-1) = {perron} is not an eigenvalue of an attachment")
        # prod_{j>=2} (lambda_j - c - x) = P_i(x + c) / (perron - c - x)
        total = total * Pi.shift(c).exquo(IntPolynomial([perron - c, -1]))
    f = RationalFunction(X * X - X * R - b * b * m, IntPolynomial([R, -1]))
    # prod_i (lambda'_i + f) = P0(-f)
    total = total * P0.compose(-f)
    return total


def charpoly_seidel_p1(
    G0seidel,
    attachment_seidels: Sequence,
    r0: int,
    r: int,
    k: int,
    m: int,
    n: int,
) -> IntPolynomial:
    """Seidel char poly of ``G0 (.)_1^n G_i`` for a regular base, from Seidel spectra.

    ``((mu1 - x)(h + mn) + 4bm(n - b) - mn^2) * prod_{i>=2} (mu_i h - 4mb^2 - x h)
    * prod_j prod_{i>=2} (mu_i^(j) + 2c - x)``.
    """
    if len(attachment_seidels) != n:
        raise ValueError(f"expected {n} attachment spectra, got {len(attachment_seidels)}")
    const = corona_constants(1, m, k, r)
    b, c, h = const.b, const.c, const.h
    Q0 = _as_charpoly(G0seidel, n)
    mu1 = n - 1 - 2 * r0 * (k - 1)
    if Q0(mu1) != 0:
        raise InapplicableError(f"n-1-2r0(k-1) = {mu1} is not a Seidel eigenvalue of the base")
    f1 = IntPolynomial([mu1, -1]) * (h + m * n) + (4 * b * m * (n - b) - m * n * n)
    # prod_{i>=2} (h(mu_i - x) - 4mb^2) = h^(n-1) Q0(y) / (mu1 - y), y = x + 4mb^2/h
    y = RationalFunction(X * h + 4 * m * b * b, h)
    f2 = RationalFunction(h ** (n - 1)) * Q0.compose(y) / (mu1 - y)
    total = f2 * f1
    mu1_att = m - 1 - 2 * r * (k - 1)
    for spec in attachment_seidels:
        Qj = _as_charpoly(spec, m)
        if Qj(mu1_att) != 0:
            raise InapplicableError(f"m-1-2r(k-1) = {mu1_att} is not a Seidel eigenvalue of an attachment")
        # prod_{i>=2} (mu_i + 2c - x) = Q_j(x - 2c) / (mu1 + 2c - x)
        total = total * Qj.shift(-2 * c).exquo(IntPolynomial([mu1_att + 2 * c, -1]))
    return total.as_polynomial().sign_normalized()


def regular_coronal(m: int, r: int, k: int) -> RationalFunction:
    """Coronal of a (k, r)-regular hypergraph on m vertices: ``m / (r(k-1) - x)``."""
    return RationalFunction(IntPolynomial([m]), IntPolynomial([r * (k - 1), -1]))


def charpoly_via_coronal(
    P0: IntPolynomial, P1: IntPolynomial, chi1: RationalFunction, b: int, n: int
) -> IntPolynomial:
    """``P1(x)^n * P0(x + b^2 chi1(x))`` cleared to a polynomial (``paper4`` model)."""
    inner = RationalFunction(X) + chi1 * (b * b)
    total = P0.compose(inner) * RationalFunction(P1 ** n)
    return total.as_polynomial().sign_normalized()


# ---------------------------------------------------------------------------
# closed-form spectra
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ClosedFormPiece:
    value: float
    multiplicity: int
    exact: ExactValue | None
    construction: str

    def to_json(self) -> dict:
        out = {"value": float(f"{self.value:.12g}") + 0.0, "multiplicity": self.multiplicity, "construction": self.construction}
        if self.exact is not None:
            out["exact"] = exact_to_json(self.exact)
        return out


@dataclass(frozen=True)
class ClosedFormSpectrum:
    pieces: tuple[ClosedFormPiece, ...]
    provenance: str
    model: str

    @property
    def order(self) -> int:
        return sum(p.multiplicity for p in self.pieces)

    def values(self) -> list[float]:
        out = []
        for p in self.pieces:
            out.extend([p.value] * p.multiplicity)
        return sorted(out, reverse=True)

    def to_json(self) -> dict:
        pieces = sorted(self.pieces, key=lambda p: (-p.value, p.construction))
        return {"provenance": self.provenance, "model": self.model, "pieces": [p.to_json() for p in pieces]}


@dataclass(frozen=True)
class EigenpairWitness:
    eigenvalue: float
    vector: np.ndarray = field(repr=False)
    construction: str

    def residual(self, M: np.ndarray) -> float:
        """``||Mx - lambda x||_inf / ||x||_inf``."""
        x = self.vector
        return float(np.max(np.abs(M @ x - self.eigenvalue * x)) / np.max(np.abs(x)))


def _quadratic_roots(s_num: int, disc: int, den: int) -> tuple[ExactValue, ExactValue]:
    """``(s_num +- sqrt(disc)) / den`` as exact values, larger first."""
    return surd(s_num, 1, disc, den), surd(s_num, -1, disc, den)


def lift_pair(lam0, perron: int, coupling_sq: int) -> tuple[tuple[float, ExactValue | None], tuple[float, ExactValue | None]]:
    """``(lam0 + perron +- sqrt((lam0 - perron)^2 + 4*coupling_sq)) / 2``, plus-branch first.

    ``lam0`` may be an exact rational, a surd, or a float; exact output only
    for rational input.
    """
    if isinstance(lam0, Fraction):
        p, q = lam0.numerator, lam0.denominator
        s = p + perron * q
        disc = (p - perron * q) ** 2 + 4 * coupling_sq * q * q
        hi, lo = _quadratic_roots(s, disc, 2 * q)
        return (exact_float(hi), hi), (exact_float(lo), lo)
    x = exact_float(lam0) if not isinstance(lam0, float) else lam0
    root = math.sqrt((x - perron) ** 2 + 4 * coupling_sq)
    return ((x + perron + root) / 2, None), ((x + perron - root) / 2, None)


def _nonperron(spec: Spectrum, perron_value: float, tol: float = 1e-8) -> list:
    """Entries with one copy of ``perron_value`` removed, as (exact-or-float, mult)."""
    out = []
    removed = False
    for e in spec.entries:
        mult = e.multiplicity
        if not removed and abs(e.value - perron_value) <= tol * max(1.0, abs(perron_value)):
            mult -= 1
            removed = True
        if mult:
            out.append((e.exact if e.exact is not None else e.value, mult))
    if not removed:
        raise InapplicableError(f"{perron_value} is not an eigenvalue of the attached hypergraph")
    return out


def spectrum_corona_two(G0spec: Spectrum, G1spec: Spectrum, r: int, k: int, m: int) -> ClosedFormSpectrum:
    """Adjacency spectrum of ``G0 (.) G1`` for (k, r)-regular G1 of order m (``paper4``)."""
    n = G0spec.order
    if G1spec.order != m:
        raise ValueError(f"attachment spectrum has order {G1spec.order}, expected {m}")
    b = binom(m - 1, k - 2)
    perron = r * (k - 1)
    pieces = []
    for e in G0spec.entries:
        lam0 = e.exact if e.exact is not None else e.value
        (vp, xp), (vm, xm) = lift_pair(lam0, perron, m * b * b)
        pieces.append(ClosedFormPiece(vp, e.multiplicity, xp, "lift+"))
        pieces.append(ClosedFormPiece(vm, e.multiplicity, xm, "lift-"))
    for val, mult in _nonperron(G1spec, perron):
        exact = val if not isinstance(val, float) else None
        pieces.append(ClosedFormPiece(exact_float(val) if exact is not None else val, mult * n, exact, "copy"))
    return ClosedFormSpectrum(tuple(pieces), "4.1", MODEL_PAPER)


def spectral_radius_corona_two(rho0: float, r: int, k: int, m: int) -> float:
    b = binom(m - 1, k - 2)
    perron = r * (k - 1)
    return (rho0 + perron + math.sqrt((rho0 - perron) ** 2 + 4 * m * b * b)) / 2


def spectrum_corona_complete(G0spec: Spectrum, m: int) -> ClosedFormSpectrum:
    """Spectrum of ``G0 (.) K_m^m`` (k = m): lifts with ``r(k-1) = b = m - 1`` and ``-1`` n(m-1) times."""
    if m < 2:
        raise InapplicableError("complete attachment needs m >= 2")
    G1spec = Spectrum((Eigenvalue(m - 1.0, 1, Fraction(m - 1)), Eigenvalue(-1.0, m - 1, Fraction(-1))))
    out = spectrum_corona_two(G0spec, G1spec, 1, m, m)
    return ClosedFormSpectrum(out.pieces, "4.2", MODEL_PAPER)


def seidel_spectrum_corona_two(
    G0seidel: Spectrum, G1seidel: Spectrum, r0: int, r1: int, k: int, m: int
) -> ClosedFormSpectrum:
    """Seidel spectrum of ``G0 (.) G1`` for regular G0, G1 (``paper4``).

    The Perron values ``n-1-2r0(k-1)`` and ``m-1-2r1(k-1)`` must be simple
    eigenvalues of the supplied spectra.
    """
    n = G0seidel.order
    b = binom(m - 1, k - 2)
    pi0 = n - 1 - 2 * r0 * (k - 1)
    pi1 = m - 1 - 2 * r1 * (k - 1)
    for spec, pi, name in ((G0seidel, pi0, "base"), (G1seidel, pi1, "attachment")):
        hits = [e for e in spec.entries if abs(e.value - pi) <= 1e-8 * max(1.0, abs(pi))]
        if not hits:
            raise InapplicableError(f"{name} Seidel spectrum lacks the Perron value {pi}")
        if hits[0].multiplicity != 1:
            raise InapplicableError(f"{name} Perron value {pi} is repeated; cannot tell which copy to exclude")
    K = 1 + 2 * r1 * (k - 1)
    pieces = []
    for val, mult in _nonperron(G0seidel, pi0):
        if isinstance(val, Fraction):
            p, q = val.numerator, val.denominator
            s = p - K * q
            disc = (p + K * q) ** 2 + 16 * m * b * b * q * q
            hi, lo = _quadratic_roots(s, disc, 2 * q)
            pieces.append(ClosedFormPiece(exact_float(hi), mult, hi, "lift+"))
            pieces.append(ClosedFormPiece(exact_float(lo), mult, lo, "lift-"))
        else:
            x = exact_float(val) if not isinstance(val, float) else val
            root = math.sqrt((x + K) ** 2 + 16 * m * b * b)
            pieces.append(ClosedFormPiece((x - K + root) / 2, mult, None, "lift+"))
            pieces.append(ClosedFormPiece((x - K - root) / 2, mult, None, "lift-"))
    for val, mult in _nonperron(G1seidel, pi1):
        exact = val if not isinstance(val, float) else None
        pieces.append(ClosedFormPiece(exact_float(val) if exact is not None else val, mult * n, exact, "copy"))
    B = 2 - n * (m + 1) + 2 * (r0 + r1) * (k - 1)
    C = pi0 * (m * n - 1 - 2 * r1 * (k - 1)) - m * (n - 2 * b) ** 2
    a1, a2 = _quadratic_roots(-B, B * B - 4 * C, 2)
    pieces.append(ClosedFormPiece(exact_float(a1), 1, a1, "quotient"))
    pieces.append(ClosedFormPiece(exact_float(a2), 1, a2, "quotient"))
    return ClosedFormSpectrum(tuple(pieces), "seidel-4", MODEL_PAPER)


def seidel_quotient_matrix(n: int, m: int, r0: int, r1: int, k: int) -> np.ndarray:
    b = binom(m - 1, k - 2)
    return np.array(
        [
            [n - 1 - 2 * r0 * (k - 1), m * (n - 2 * b)],
            [n - 2 * b, m * n - 1 - 2 * r1 * (k - 1)],
        ],
        dtype=np.int64,
    )


def _orthogonal_complement_eigs(A1: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Eigenpairs of a matrix commuting with J, restricted to the complement of the all-ones vector."""
    m = A1.shape[0]
    if m <= 1:
        return np.zeros(0), np.zeros((m, 0))
    ones = np.ones((m, 1)) / math.sqrt(m)
    # orthonormal basis of 1^perp from a QR of [1 | I]
    Q, _ = np.linalg.qr(np.hstack([ones, np.eye(m)]))
    B = Q[:, 1:m]
    w, Z = symmetric_eigh(B.T @ A1 @ B)
    return w, B @ Z


def corona_two_eigenpairs(G0: Hypergraph, G1: Hypergraph) -> list[EigenpairWitness]:
    """Explicit eigenvectors of the ``paper4`` adjacency of ``G0 (.) G1``.

    Lifts ``[x; t (1_m (x) x)]`` with ``t = b / (lambda - r(k-1))`` for each
    base eigenpair, and ``[0; y (x) e_i]`` for each attachment eigenvector y
    orthogonal to the all-ones vector.
    """
    r = regularity(G1)
    if r is None:
        raise InapplicableError("the attached hypergraph must be regular")
    n, m, k = G0.n, G1.n, G1.k
    b = binom(m - 1, k - 2)
    perron = r * (k - 1)
    w0, V0 = symmetric_eigh(adjacency_matrix(G0).astype(float))
    out = []
    ones_m = np.ones(m)
    for lam0, x in zip(w0, V0.T):
        (vp, _), (vm, _) = lift_pair(float(lam0), perron, m * b * b)
        for lam, tag in ((vp, "lift+"), (vm, "lift-")):
            if b == 0:
                # uncoupled: the lift is x itself or a constant copy vector
                # the plus branch is max(lam0, perron)
                if (tag == "lift+") == (lam0 >= perron):
                    vec = np.concatenate([x, np.zeros(n * m)])
                else:
                    vec = np.concatenate([np.zeros(n), np.kron(ones_m, x)])
            else:
                t = b / (lam - perron)
                vec = np.concatenate([x, t * np.kron(ones_m, x)])
            out.append(EigenpairWitness(lam, vec, tag))
    w1, Y = _orthogonal_complement_eigs(adjacency_matrix(G1).astype(float))
    for lam1, y in zip(w1, Y.T):
        for i in range(n):
            e = np.zeros(n)
            e[i] = 1.0
            out.append(EigenpairWitness(float(lam1), np.concatenate([np.zeros(n), np.kron(y, e)]), "copy"))
    return out
