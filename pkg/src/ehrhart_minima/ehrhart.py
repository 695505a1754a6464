"""Ehrhart polynomials by exact interpolation, and their root sets."""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

import numpy as np

from . import polyroots as pr
from .errors import InconsistentCounts, NonConvergence
from .geometry import LatticePolytope, count_lattice_points, dilate, normalized_surface
from .report import VerificationReport, aggregate

DEFAULT_TOL = 1e-12


@dataclass(frozen=True)
class EhrhartPolynomial:
    """``G(s) = sum G_i s**i``; ``coefficients[i]`` is ``G_i``."""

    coefficients: tuple[Fraction, ...]

    @property
    def dimension(self) -> int:
        return len(self.coefficients) - 1

    @property
    def leading(self) -> Fraction:
        return self.coefficients[-1]

    def __getitem__(self, i: int) -> Fraction:
        return self.coefficients[i]

    def __call__(self, s):
        return evaluate(self, s)

    def __mul__(self, other: "EhrhartPolynomial") -> "EhrhartPolynomial":
        return EhrhartPolynomial(tuple(pr.poly_mul(self.coefficients, other.coefficients)))

    def to_json(self) -> list:
        return [[c.numerator, c.denominator] for c in self.coefficients]


def evaluate(E: EhrhartPolynomial, s):
    """Horner evaluation; exact for int/Fraction arguments."""
    if isinstance(s, int):
        s = Fraction(s)
    return pr.horner(E.coefficients, s)


def _solve(matrix: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction]:
    n = len(rhs)
    m = [row[:] + [r] for row, r in zip(matrix, rhs)]
    for c in range(n):
        p = next(i for i in range(c, n) if m[i][c] != 0)
        m[c], m[p] = m[p], m[c]
        for i in range(n):
            if i != c and m[i][c] != 0:
                f = m[i][c] / m[c][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[c])]
    return [m[i][n] / m[i][i] for i in range(n)]


def interpolate(counts: Sequence[int]) -> EhrhartPolynomial:
    """Coefficients from ``counts[k-1] = G(kP)``, ``k = 1..n``, with ``G_0 = 1`` pinned."""
    n = len(counts)
    matrix = [[Fraction(k) ** i for i in range(1, n + 1)] for k in range(1, n + 1)]
    rhs = [Fraction(c - 1) for c in counts]
    return EhrhartPolynomial((Fraction(1),) + tuple(_solve(matrix, rhs)))


@lru_cache(maxsize=4096)
def _ehrhart_cached(P: LatticePolytope) -> EhrhartPolynomial:
    n = P.dimension
    counts = [count_lattice_points(dilate(P, k)) for k in range(1, n + 1)]
    E = interpolate(counts)
    if E[n] != P.volume:
        raise InconsistentCounts(f"{P.name}: leading coefficient {E[n]} != volume {P.volume}")
    if E[n - 1] != normalized_surface(P):
        raise InconsistentCounts(f"{P.name}: G_(n-1) {E[n - 1]} != normalised surface {normalized_surface(P)}")
    return E


def ehrhart_polynomial(P: LatticePolytope) -> EhrhartPolynomial:
    return _ehrhart_cached(P)


def reciprocity_check(P: LatticePolytope, k_max: int = 5) -> VerificationReport:
    E = ehrhart_polynomial(P)
    n = P.dimension
    sub, rows = {}, []
    for k in range(1, k_max + 1):
        interior = count_lattice_points(dilate(P, k), "interior")
        predicted = (-1) ** n * evaluate(E, -k)
        sub[f"k={k}"] = interior == predicted
        rows.append({"k": k, "interior": interior, "predicted": predicted})
    return aggregate("reciprocity", P.name, sub, details={"values": rows})


def coefficient_identities(P: LatticePolytope) -> VerificationReport:
    E = ehrhart_polynomial(P)
    n = P.dimension
    vol, surf = P.volume, normalized_surface(P)
    sub = {"G0=1": E[0] == 1, "Gn=vol": E[n] == vol, "Gn-1=surface": E[n - 1] == surf}
    return aggregate("coefficient_identities", P.name, sub,
                     details={"G": E, "volume": vol, "normalized_surface": surf})


# ---------------------------------------------------------------------------
# roots


@dataclass(frozen=True)
class RootSet:
    """Roots of an Ehrhart polynomial.

    Rational roots are exact with multiplicity; every other root (real
    irrational ones included, with ``im == 0``) is a float pair listed once
    per multiplicity.
    """

    rational_roots: tuple[tuple[Fraction, int], ...]
    complex_roots: tuple[tuple[float, float], ...]
    residual_tolerance: float = DEFAULT_TOL

    def all_roots(self) -> list[complex]:
        out = [complex(float(r)) for r, m in self.rational_roots for _ in range(m)]
        return out + [complex(re, im) for re, im in self.complex_roots]

    @property
    def gammas(self) -> list[complex]:
        return [-z for z in self.all_roots()]

    @property
    def multiplicity(self) -> int:
        return sum(m for _, m in self.rational_roots) + len(self.complex_roots)

    def real_roots(self) -> list[float]:
        out = [float(r) for r, m in self.rational_roots for _ in range(m)]
        return sorted(out + [re for re, im in self.complex_roots if im == 0])

    def to_json(self) -> dict:
        return {
            "rational": [[r.numerator, r.denominator, m] for r, m in self.rational_roots],
            "complex": [[re, im] for re, im in self.complex_roots],
        }


def _numeric_roots(f: pr.Poly, tol: float) -> list[tuple[float, float]]:
    """Roots of a square-free rational factor with no rational roots."""
    d = pr.degree(f)
    reals = []
    for a, b in pr.isolate_real_roots(f):
        reals.append(float(pr.refine_root(f, a, b, tol * 1e-3)))
    ncomplex = d - len(reals)
    out = [(x, 0.0) for x in reals]
    if ncomplex == 0:
        return out
    fl = [float(c) for c in f]
    if d == 2:
        re = -fl[1] / (2 * fl[2])
        im = math.sqrt(fl[0] / fl[2] - re * re)
        return [(re, im), (re, -im)]
    z = list(pr.aberth(fl))
    for x in reals:
        z.pop(min(range(len(z)), key=lambda i: abs(z[i] - x)))
    z.sort(key=lambda w: -w.imag)
    for w in z[: ncomplex // 2]:
        w = pr.newton_polish(fl, complex(w.real, abs(w.imag)))
        out += [(w.real, abs(w.imag)), (w.real, -abs(w.imag))]
    return out


def roots(E: EhrhartPolynomial, tol: float = DEFAULT_TOL) -> RootSet:
    """Exact rational roots first, then Sturm bisection and Aberth iteration."""
    rational: list[tuple[Fraction, int]] = []
    approx: list[tuple[float, float]] = []
    for f, mult in pr.squarefree_factors(E.coefficients):
        for r in pr.rational_roots(f):
            rational.append((r, mult))
            f = pr.deflate(f, r)
        if pr.degree(f) >= 1:
            approx += _numeric_roots(f, tol) * mult
    coeffs = np.array([float(c) for c in E.coefficients][::-1])
    scale = float(np.max(np.abs(coeffs)))
    for re, im in approx:
        if abs(np.polyval(coeffs, complex(re, im))) > tol * scale:
            raise NonConvergence(f"root {re}+{im}j misses residual target {tol}")
    rational.sort()
    approx.sort()
    return RootSet(tuple(rational), tuple(approx), tol)


def _rational_sqrt(x: Fraction) -> Fraction | None:
    if x < 0:
        return None
    p, q = math.isqrt(x.numerator), math.isqrt(x.denominator)
    if p * p == x.numerator and q * q == x.denominator:
        return Fraction(p, q)
    return None


def quadratic_rootset(g2: Fraction, g1: Fraction, g0: Fraction = Fraction(1)) -> RootSet:
    """Closed-form roots of ``g2 s^2 + g1 s + g0``, exact when the discriminant is a square."""
    disc = g1 * g1 - 4 * g2 * g0
    root = _rational_sqrt(disc)
    if root is not None:
        r1, r2 = (-g1 - root) / (2 * g2), (-g1 + root) / (2 * g2)
        rational = ((r1, 2),) if r1 == r2 else ((r1, 1), (r2, 1))
        return RootSet(rational, ())
    re = float(-g1 / (2 * g2))
    if disc < 0:
        im = math.sqrt(float(-disc)) / float(2 * g2)
        return RootSet((), ((re, -im), (re, im)))
    w = math.sqrt(float(disc)) / float(2 * g2)
    return RootSet((), ((re - w, 0.0), (re + w, 0.0)))
