"""Grouped spectra of symmetric integer matrices with exact root descriptors."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

import numpy as np

from .linalg import char_poly, is_symmetric
from .poly import IntPolynomial

DEFAULT_TOL = 1e-8


class ConvergenceError(RuntimeError):
    """The symmetric eigensolver failed to converge."""


def _square_part(v: int) -> tuple[int, int]:
    """Split ``v = q^2 * r`` with r squarefree."""
    q, r = 1, v
    f = 2
    while f * f <= r:
        while r % (f * f) == 0:
            r //= f * f
            q *= f
        f += 1
    return q, r


@dataclass(frozen=True)
class QuadraticSurd:
    """``(u + coeff * sqrt(radicand)) / den`` in lowest terms, radicand squarefree > 1."""

    u: int
    coeff: int
    radicand: int
    den: int

    @property
    def value(self) -> float:
        return (self.u + self.coeff * math.sqrt(self.radicand)) / self.den

    def conjugate(self) -> "QuadraticSurd":
        return QuadraticSurd(self.u, -self.coeff, self.radicand, self.den)

    def __str__(self):
        q = abs(self.coeff)
        root = f"sqrt({self.radicand})" if q == 1 else f"{q}*sqrt({self.radicand})"
        sign = "+" if self.coeff > 0 else "-"
        if self.u == 0:
            body = root if sign == "+" else f"-{root}"
            return body if self.den == 1 else f"{body}/{self.den}"
        body = f"{self.u} {sign} {root}"
        return body if self.den == 1 else f"({body})/{self.den}"

    def to_json(self) -> dict:
        return {
            "kind": "surd",
            "u": self.u,
            "coeff": self.coeff,
            "radicand": self.radicand,
            "den": self.den,
            "text": str(self),
        }


ExactValue = Union[Fraction, QuadraticSurd]


def surd(u: int, sign: int, v: int, w: int) -> ExactValue:
    """Normalise ``(u + sign*sqrt(v)) / w`` for integers with ``v >= 0``, ``w != 0``."""
    if v < 0:
        raise ValueError("negative radicand")
    if w == 0:
        raise ZeroDivisionError("zero denominator")
    q, r = _square_part(v)
    if r == 1 or v == 0:
        return Fraction(u + sign * q * (1 if v else 0), w)
    coeff = sign * q
    if w < 0:
        u, coeff, w = -u, -coeff, -w
    g = math.gcd(math.gcd(u, coeff), w)
    return QuadraticSurd(u // g, coeff // g, r, w // g)


def exact_float(x: ExactValue) -> float:
    return float(x) if isinstance(x, Fraction) else x.value


def exact_to_json(x: ExactValue | None):
    if x is None:
        return None
    if isinstance(x, Fraction):
        return {"kind": "rational", "text": str(x)}
    return x.to_json()


def exact_str(x: ExactValue) -> str:
    return str(x)


@dataclass(frozen=True)
class Eigenvalue:
    value: float
    multiplicity: int
    exact: ExactValue | None = None

    def to_json(self) -> dict:
        out = {"value": _round_json(self.value), "multiplicity": self.multiplicity}
        if self.exact is not None:
            out["exact"] = exact_to_json(self.exact)
        return out


def _round_json(v: float) -> float:
    # 12 significant digits keeps repeated runs byte-identical
    return float(f"{v:.12g}") + 0.0


@dataclass(frozen=True)
class Spectrum:
    """Eigenvalue/multiplicity list, descending, optionally backed by an exact char poly."""

    entries: tuple[Eigenvalue, ...]
    char_poly: IntPolynomial | None = None
    max_residual: float | None = None

    @property
    def order(self) -> int:
        return sum(e.multiplicity for e in self.entries)

    @property
    def radius(self) -> float:
        """Largest eigenvalue."""
        return self.entries[0].value

    def values(self) -> list[float]:
        """Flattened eigenvalues, descending, repeated by multiplicity."""
        out = []
        for e in self.entries:
            out.extend([e.value] * e.multiplicity)
        return out

    def certified(self, tol: float = DEFAULT_TOL) -> bool:
        return self.max_residual is not None and self.max_residual <= tol

    def to_json(self) -> list[dict]:
        return [e.to_json() for e in self.entries]


def group_values(values: Iterable[float], tol: float = DEFAULT_TOL) -> list[tuple[float, int]]:
    """Cluster values (descending) whose spread is within ``tol * max(1, max|v|)``."""
    vals = sorted((float(v) for v in values), reverse=True)
    if not vals:
        return []
    scale = tol * max(1.0, max(abs(v) for v in vals))
    groups: list[list[float]] = [[vals[0]]]
    for v in vals[1:]:
        if groups[-1][0] - v <= scale:
            groups[-1].append(v)
        else:
            groups.append([v])
    return [(sum(g) / len(g), len(g)) for g in groups]


def normalized_residual(p: IntPolynomial, x: float) -> float:
    """``|p(x)| / sum |c_i| max(1, |x|)^i``; equals ``|p(x)| / ||p||_1`` for ``|x| <= 1``."""
    scale = p.abs_eval_float(x)
    return abs(p.eval_float(x)) / scale if scale else 0.0


def symmetric_eigh(M) -> tuple[np.ndarray, np.ndarray]:
    """Eigenvalues descending (ties keep solver order) with matching eigenvectors."""
    A = np.asarray(M, dtype=float)
    try:
        w, V = np.linalg.eigh(A)
    except np.linalg.LinAlgError as exc:
        raise ConvergenceError(str(exc)) from exc
    order = np.argsort(-w, kind="stable")
    return w[order], V[:, order]


def numeric_spectrum(M, tol: float = DEFAULT_TOL, exact: bool = True) -> Spectrum:
    """Grouped spectrum of a symmetric integer matrix.

    Each group is certified against the exact characteristic polynomial;
    integer roots and quadratic-surd pairs are identified exactly when
    ``exact`` is set.
    """
    if not is_symmetric(M):
        raise ValueError("numeric_spectrum requires a symmetric matrix")
    M = np.asarray(M)
    if M.shape[0] == 0:
        return Spectrum((), IntPolynomial([1]), 0.0)
    w, _ = symmetric_eigh(M)
    groups = group_values(w, tol)
    P = char_poly(M).sign_normalized()
    residual = max(normalized_residual(P, v) for v, _ in groups)
    exacts = identify_exact(P, groups) if exact else [None] * len(groups)
    entries = tuple(Eigenvalue(v, mult, ex) for (v, mult), ex in zip(groups, exacts))
    return Spectrum(entries, P, residual)


def identify_exact(P: IntPolynomial, groups: Sequence[tuple[float, int]]) -> list[ExactValue | None]:
    """Attach exact values to grouped roots of a monic integer polynomial.

    A group becomes exact only when the exact multiplicity in ``P`` agrees
    with the group's size.
    """
    out: list[ExactValue | None] = [None] * len(groups)
    pending = []
    for idx, (v, mult) in enumerate(groups):
        r = round(v)
        if abs(v - r) < 1e-6 and P(r) == 0 and P.root_multiplicity(r) == mult:
            out[idx] = Fraction(r)
        else:
            pending.append(idx)
    used: set[int] = set()
    for a_pos, a in enumerate(pending):
        if a in used:
            continue
        va, ma = groups[a]
        for b in pending[a_pos + 1:]:
            if b in used or groups[b][1] != ma:
                continue
            vb = groups[b][0]
            s, q = va + vb, va * vb
            si, qi = round(s), round(q)
            if abs(s - si) > 1e-6 * max(1.0, abs(s)) or abs(q - qi) > 1e-6 * max(1.0, abs(q)):
                continue
            quad = IntPolynomial([qi, -si, 1])
            if _factor_multiplicity(P, quad) != ma:
                continue
            disc = si * si - 4 * qi
            hi, lo = surd(si, 1, disc, 2), surd(si, -1, disc, 2)
            out[a], out[b] = (hi, lo) if va >= vb else (lo, hi)
            used.update((a, b))
            break
    return out


def _factor_multiplicity(P: IntPolynomial, f: IntPolynomial) -> int:
    mult = 0
    while True:
        q, r = P.divmod_exact_lc(f)
        if not r.is_zero():
            return mult
        P, mult = q, mult + 1


def spectrum_from_values(values: Iterable[float], tol: float = DEFAULT_TOL) -> Spectrum:
    return Spectrum(tuple(Eigenvalue(v, m) for v, m in group_values(values, tol)))


def multisets_match(a: Sequence[float], b: Sequence[float], tol: float) -> tuple[bool, float]:
    """Compare two eigenvalue multisets after sorting; absolute tolerance.

    Returns ``(match, max deviation)``.
    """
    if len(a) != len(b):
        return False, math.inf
    a_sorted, b_sorted = np.sort(np.asarray(a, float)), np.sort(np.asarray(b, float))
    dev = float(np.max(np.abs(a_sorted - b_sorted))) if len(a) else 0.0
    return dev <= tol, dev
