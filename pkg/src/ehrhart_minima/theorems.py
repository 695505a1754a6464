"""Executable checks of the inequalities, equality cases and planar root structure.

Every check that involves the roots ``-gamma_i`` is restated through the
coefficient identities (``prod gamma_i = 1 / G_n``,
``sum gamma_i = G_(n-1) / G_n``, ...) so that it runs in exact rational
arithmetic.  Floats only appear in region membership and convergence
tracking, always with an explicit tolerance.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from . import polyroots as pr
from .ehrhart import (RootSet, coefficient_identities, ehrhart_polynomial, quadratic_rootset,
                      reciprocity_check, roots)
from .errors import (DependentDirections, DimensionTooLarge, EhrhartError, Not2D, NotSymmetric,
                     ParameterConstraint)
from .gallery import (box, cross_polytope, cube, diamond_K, hexagon_H, hexagon_Hk, hexagon_tilde,
                      interior_box, kleetope, prism, product, reeve, standard_gallery)
from .geometry import IntVector, LatticePolytope, count_lattice_points, pyramid_decomposition, rank
from .minima import minkowski_second_check, successive_minima
from .report import VerificationReport, aggregate, compare, sort_reports

PLANAR_TOL = 1e-9
SQRT3_HALF = math.sqrt(3) / 2


def _symmetric(P: LatticePolytope) -> None:
    if not P.symmetric:
        raise NotSymmetric(f"{P.name} is not 0-symmetric")


# ---------------------------------------------------------------------------
# sums of root moments vs successive minima


def verify_main_theorem(P: LatticePolytope) -> VerificationReport:
    """``G_(n-1) / vol <= sum lambda_i / 2`` in exact arithmetic."""
    _symmetric(P)
    E = ehrhart_polynomial(P)
    lam = successive_minima(P).lambdas
    n = P.dimension
    return compare("main_theorem", P.name, E[n - 1] / E[n], sum(lam) / 2, "<=",
                   details={"lambdas": list(lam)})


def verify_corollary_minima_analogue(P: LatticePolytope) -> VerificationReport:
    """Mean of the ``gamma_i`` is at most ``lambda_n / 2``."""
    _symmetric(P)
    E = ehrhart_polynomial(P)
    lam = successive_minima(P).lambdas
    n = P.dimension
    return compare("corollary_minima_analogue", P.name, E[n - 1] / (n * E[n]), lam[-1] / 2, "<=")


def verify_corollary_second_coeff(P: LatticePolytope) -> VerificationReport:
    _symmetric(P)
    E = ehrhart_polynomial(P)
    lam = successive_minima(P).lambdas
    n = P.dimension
    inv = [Fraction(2) / l for l in lam]
    rhs = sum(math.prod(inv[:j] + inv[j + 1:]) for j in range(n))
    return compare("corollary_second_coeff", P.name, E[n - 1], rhs, "<=")


def minkowski_root_form(P: LatticePolytope) -> VerificationReport:
    """``prod(lambda_i/2) <= prod gamma_i = 1/vol <= n! prod(lambda_i/2)``."""
    _symmetric(P)
    lam = successive_minima(P).lambdas
    n = P.dimension
    low = math.prod(l / 2 for l in lam)
    mid = 1 / ehrhart_polynomial(P)[n]
    high = math.factorial(n) * low
    status = "upper" if low == mid else "lower" if mid == high else "neither"
    return aggregate("minkowski_roots", P.name,
                     {"left": low <= mid, "right": mid <= high},
                     details={"prod_half_lambda": low, "prod_gamma": mid,
                              "n!_prod_half_lambda": high, "tight_side": status})


def sum_of_squares_conjecture(P: LatticePolytope) -> VerificationReport:
    """``sum gamma_i^2 <= sum (lambda_i/2)^2``; proven in the plane, open above."""
    _symmetric(P)
    E = ehrhart_polynomial(P)
    n = P.dimension
    lam = successive_minima(P).lambdas
    g_n2 = E[n - 2] if n >= 2 else Fraction(0)
    lhs = (E[n - 1] ** 2 - 2 * E[n] * g_n2) / E[n] ** 2
    rhs = sum((l / 2) ** 2 for l in lam)
    return compare("conjecture_sum_of_squares", P.name, lhs, rhs, "<=", conjecture=n >= 3)


conjecture_sum_of_squares = sum_of_squares_conjecture


# ---------------------------------------------------------------------------
# pyramid partition lemma


@dataclass(frozen=True)
class PyramidPartition:
    """Facets whose normals are orthogonal to ``v_1..v_k``, with their pyramid volumes."""

    directions: tuple[IntVector, ...]
    index_sets: tuple[frozenset[int], ...]
    partial_volumes: tuple[Fraction, ...]

    def to_json(self) -> dict:
        return {
            "directions": [list(v) for v in self.directions],
            "index_sets": [sorted(s) for s in self.index_sets],
            "partial_volumes": list(self.partial_volumes),
        }


def pyramid_partition(P: LatticePolytope, directions: Sequence[Sequence[int]] | None = None) -> PyramidPartition:
    n = P.dimension
    if directions is None:
        directions = successive_minima(P).witnesses
    dirs = tuple(tuple(int(c) for c in v) for v in directions)
    if len(dirs) != n or any(len(v) != n for v in dirs) or rank(dirs) < n:
        raise DependentDirections(f"need {n} linearly independent directions in Z^{n}")
    pyr = pyramid_decomposition(P, apex=(0,) * n).volumes
    sets, nus = [], []
    for k in range(n + 1):
        V = frozenset(j for j, h in enumerate(P.facets)
                      if all(sum(a * x for a, x in zip(h.normal, v)) == 0 for v in dirs[:k]))
        sets.append(V)
        nus.append(sum((pyr[j] for j in V), Fraction(0)))
    return PyramidPartition(dirs, tuple(sets), tuple(nus))


def verify_pyramid_lemma(P: LatticePolytope, directions: Sequence[Sequence[int]] | None = None) -> VerificationReport:
    """``vol(P) >= n/(n-k) * nu_k`` whenever ``V_k`` is nonempty (apex at the origin)."""
    _symmetric(P)
    part = pyramid_partition(P, directions)
    n, vol = P.dimension, P.volume
    sub, tight = {}, {}
    for k in range(n):
        if part.index_sets[k]:
            bound = Fraction(n, n - k) * part.partial_volumes[k]
            sub[f"k={k}"] = vol >= bound
            tight[f"k={k}"] = vol == bound
    return aggregate("pyramid_lemma", P.name, sub, details={"partition": part, "tight": tight})


# ---------------------------------------------------------------------------
# real roots and interior points


def verify_real_root_bound(P: LatticePolytope) -> VerificationReport:
    """No real root in ``(-inf, -1]`` for symmetric ``P`` with ``n <= 3``."""
    _symmetric(P)
    if P.dimension > 3:
        raise DimensionTooLarge(f"{P.name}: real-root bound is established only for n <= 3")
    E = ehrhart_polynomial(P)
    count = pr.count_real_roots(E.coefficients, -math.inf, Fraction(-1))
    return compare("real_root_bound", P.name, count, 0, "=")


def verify_interior_volume_bound(P: LatticePolytope, interior: int | None = None) -> VerificationReport:
    """Blichfeldt / van der Corput: ``vol <= 2^n (l+1)/2`` with ``l`` interior points."""
    _symmetric(P)
    l = count_lattice_points(P, "interior") if interior is None else interior
    n = P.dimension
    return compare("interior_volume_bound", P.name, P.volume, Fraction(2 ** n * (l + 1), 2), "<=",
                   details={"interior": l})


# ---------------------------------------------------------------------------
# planar root geometry


def _in_region(re: float, im: float, tol: float = PLANAR_TOL) -> bool:
    if im == 0 and any(abs(re - x) <= tol for x in (-2.0, -1.0, -2 / 3)):
        return True
    return -0.5 - tol <= re < tol and math.hypot(re + 2 / 3, im) <= 2 / 3 + tol


def planar_checks(name: str, g2: Fraction, g1: Fraction, interior: int, boundary: int,
                  rs: RootSet | None = None) -> VerificationReport:
    """The planar root-geometry sub-checks from the coefficients and point counts alone."""
    g2, g1 = Fraction(g2), Fraction(g1)
    m = boundary
    rs = rs or quadratic_rootset(g2, g1)
    disc = g1 * g1 - 4 * g2
    sub: dict[str, bool] = {}
    sub["pick"] = g2 == interior + g1 - 1 and 2 * g1 == m
    if disc < 0:
        a = -g1 / (2 * g2)
        b2 = 1 / g2 - a * a
        sub["circle"] = (a + Fraction(2, m)) ** 2 + b2 == Fraction(2, m) ** 2
    sub["real_criterion"] = (disc >= 0) == ((Fraction(m, 4) - 1) ** 2 >= interior)
    pts = [(z.real, z.imag) for z in rs.all_roots()]
    sub["region"] = all(_in_region(re, im) for re, im in pts)
    if interior == 0:
        expected = sorted([Fraction(-1), Fraction(-2, m - 2)])
        got = sorted(r for r, k in rs.rational_roots for _ in range(k))
        sub["interior_free_roots"] = got == expected
    on_line = all(abs(re + 0.5) <= PLANAR_TOL for re, _ in pts)
    sub["half_line"] = on_line == (interior == 1 and g1 == g2 and m <= 8)
    if interior == 1:
        sub["scott_bound"] = g2 <= Fraction(9, 2)
        if m > 8:
            sub["scott_triangle"] = m == 9 and rs.rational_roots == ((Fraction(-2, 3), 1), (Fraction(-1, 3), 1))
    return aggregate("planar_root_geometry", name, sub, tolerance=PLANAR_TOL,
                     details={"g2": g2, "g1": g1, "interior": interior, "boundary": m,
                              "on_half_line": on_line, "roots": rs})


def planar_root_geometry(P: LatticePolytope) -> VerificationReport:
    if P.dimension != 2:
        raise Not2D(f"{P.name} has dimension {P.dimension}")
    E = ehrhart_polynomial(P)
    interior = count_lattice_points(P, "interior")
    boundary = count_lattice_points(P) - interior
    return planar_checks(P.name, E[2], E[1], interior, boundary, roots(E))


# ---------------------------------------------------------------------------
# families and witness sequences


def cluster_witness_sequence(p: int, q: int, k_list: Iterable[int]) -> list[RootSet]:
    """Roots of the hexagons ``H_k``; the larger-magnitude root tends to ``-p/q``."""
    out = []
    for k in k_list:
        E = ehrhart_polynomial(hexagon_Hk(p, q, k))
        out.append(roots(E))
    return out


def _larger_root(rs: RootSet) -> complex:
    return min(rs.all_roots(), key=lambda z: (z.real, z.imag))


def cluster_witness_report(p: int, q: int, k_list: Sequence[int]) -> VerificationReport:
    k_list = list(k_list)
    target = -p / q
    dist = [abs(_larger_root(rs) - target) for rs in cluster_witness_sequence(p, q, k_list)]
    # at p/q = 1/2 the hexagon is a rectangle whose root sits on the limit for every k
    sub = {f"k={a}->{b}": d2 < d1 or d1 == d2 == 0
           for a, b, d1, d2 in zip(k_list, k_list[1:], dist, dist[1:])}
    return aggregate("cluster_witness", f"Hk({p},{q})", sub,
                     details={"k": k_list, "distance": dist, "target": [p, -q]})


def reeve_other_roots(q: int) -> tuple[complex, complex]:
    """The two roots of ``R_q`` besides ``-1``, ordered by real part."""
    rs = roots(ehrhart_polynomial(reeve(q)))
    rest = rs.all_roots()
    rest.remove(min(rest, key=lambda z: abs(z + 1)))
    a, b = sorted(rest, key=lambda z: (z.real, z.imag))
    return a, b


def reeve_root_drift(q_list: Iterable[int]) -> VerificationReport:
    """``-1`` is always an exact root of ``R_q``; the other two drift toward 0 and 1."""
    sub, rows = {}, []
    for q in q_list:
        rs = roots(ehrhart_polynomial(reeve(q)))
        sub[f"q={q}:-1"] = any(r == -1 for r, _ in rs.rational_roots)
        small, large = reeve_other_roots(q)
        rows.append({"q": q, "roots": rs, "distance_to_1": abs(large - 1), "distance_to_0": abs(small)})
    return aggregate("reeve_root_drift", "reeve", sub, details={"drift": rows})


def prism_root_check(P: LatticePolytope) -> VerificationReport:
    """``P x [-1, 1]`` has the Ehrhart polynomial ``(2s+1) G(s, P)`` and thus one more root ``-1/2``."""
    Q = prism(P)
    E, F = ehrhart_polynomial(P), ehrhart_polynomial(Q)
    half = Fraction(-1, 2)

    def mult(rs: RootSet) -> int:
        return sum(k for r, k in rs.rational_roots if r == half)

    extra = mult(roots(F)) - mult(roots(E))
    return aggregate("prism_root", P.name, {
        "product_rule": F.coefficients == tuple(pr.poly_mul(E.coefficients, [1, 2])),
        "adds_minus_half": extra == 1,
    })


def crosspolytope_remark_check(n: int) -> VerificationReport:
    """``G_(n-2)/vol`` of the cross-polytope equals ``(n+1)/6 * C(n, 2)``."""
    E = ehrhart_polynomial(cross_polytope(n))
    return compare("crosspolytope_remark", f"cross({n})", E[n - 2] / E[n],
                   Fraction(n + 1, 6) * math.comb(n, 2), "=",
                   details={"G_n-2": E[n - 2], "G_n": E[n]})


def kleetope_identity(l: int, n: int) -> VerificationReport:
    """For ``M_l`` the first inequality holds with ratio exactly ``1/l``."""
    P = kleetope(l, n)
    main = verify_main_theorem(P)
    return compare("kleetope_identity", P.name, main.lhs, main.rhs / l, "=",
                   details={"strict": main.lhs < main.rhs})


def real_root_frontier_scan(polytopes: Iterable[LatticePolytope]) -> VerificationReport:
    """Smallest real root over symmetric polytopes of dimension at most 3."""
    best, where = math.inf, None
    for P in polytopes:
        if not P.symmetric or P.dimension > 3:
            continue
        reals = roots(ehrhart_polynomial(P)).real_roots()
        if reals and reals[0] < best:
            best, where = reals[0], P.name
    if where is None:
        raise ParameterConstraint("frontier scan needs a symmetric polytope of dimension <= 3 with real roots")
    return compare("real_root_frontier", "scan", best, -1.0, ">", conjecture=True,
                   details={"argmin": where, "distance_to_-sqrt3/2": abs(best + SQRT3_HALF)})


def equality_case_matrix(n: int = 3) -> list[VerificationReport]:
    """Polytopes realising equality/strictness against each Minkowski status.

    ``n`` is 2 or 3; the diamond ``K`` is always planar.
    """
    if n == 2:
        zoo = [box([1, 2]), cross_polytope(2), hexagon_H(), hexagon_tilde(), diamond_K(), kleetope(2, 2)]
    elif n == 3:
        C1 = cube(1)
        zoo = [box([1, 1, 2]), cross_polytope(3), product(hexagon_H(), C1),
               product(hexagon_tilde(), C1), diamond_K(), kleetope(2, 3)]
    else:
        raise ParameterConstraint("the equality matrix is built for n in {2, 3}")
    out = []
    for P in zoo:
        main = verify_main_theorem(P)
        side = minkowski_second_check(P).details["tight_side"]
        out.append(compare("equality_case", P.name, main.lhs, main.rhs, "<=",
                           details={"main": "equality" if main.tight else "strict",
                                    "minkowski": side}))
    return out


EQUALITY_MATRIX_EXPECTED = {
    2: {"box(1,2)": ("equality", "upper"), "cross(2)": ("equality", "lower"), "H": ("equality", "neither"),
        "H~": ("strict", "upper"), "K": ("strict", "lower"), "kleetope(2,2)": ("strict", "neither")},
    3: {"box(1,1,2)": ("equality", "upper"), "cross(3)": ("equality", "lower"),
        "H x cube(1)": ("equality", "neither"), "H~ x cube(1)": ("strict", "upper"),
        "K": ("strict", "lower"), "kleetope(2,3)": ("strict", "neither")},
}


def equality_case_report(n: int = 3) -> VerificationReport:
    got = {r.polytope_name: (r.details["main"], r.details["minkowski"]) for r in equality_case_matrix(n)}
    expected = EQUALITY_MATRIX_EXPECTED[n]
    sub = {name: got.get(name) == want for name, want in expected.items()}
    combos = {want for want in got.values()}
    sub["all_six_combinations"] = len(combos) == 6
    return aggregate("equality_case_matrix", f"n={n}", sub,
                     details={"statuses": {k: list(v) for k, v in got.items()}})


# ---------------------------------------------------------------------------
# suites


Check = Callable[[LatticePolytope], VerificationReport]


def _sym(fn: Check, max_dim: int = 99) -> tuple[Check, Callable[[LatticePolytope], bool]]:
    return fn, lambda P: P.symmetric and P.dimension <= max_dim


SUITES: dict[str, list[tuple[Check, Callable[[LatticePolytope], bool]]]] = {
    "main": [_sym(verify_main_theorem)],
    "minkowski": [_sym(minkowski_second_check), _sym(minkowski_root_form)],
    "lemma31": [_sym(verify_pyramid_lemma)],
    "prop15": [_sym(verify_real_root_bound, 3)],
    "planar": [(planar_root_geometry, lambda P: P.dimension == 2)],
    "interior": [_sym(verify_interior_volume_bound)],
    "conjectures": [_sym(sum_of_squares_conjecture)],
}
SUITES["all"] = (
    [(reciprocity_check, lambda P: True), (coefficient_identities, lambda P: True)]
    + [_sym(verify_corollary_minima_analogue), _sym(verify_corollary_second_coeff)]
    + [c for name, checks in SUITES.items() for c in checks]
)
SUITE_NAMES = tuple(SUITES)


def global_reports(suite: str) -> list[VerificationReport]:
    """Family-level checks that do not belong to a single polytope."""
    out: list[VerificationReport] = []
    if suite in ("main", "all"):
        out += [kleetope_identity(l, n) for n in (2, 3) for l in (1, 2, 3)]
        out += [equality_case_report(2), equality_case_report(3)]
    if suite in ("interior", "all"):
        out.append(reeve_root_drift(range(1, 21)))
        out += [prism_root_check(P) for P in (hexagon_H(), diamond_K(), cross_polytope(2), reeve(4))]
        out += [verify_interior_volume_bound(interior_box(n, l)) for n in (2, 3) for l in (1, 3, 5)]
    if suite in ("planar", "all"):
        out.append(cluster_witness_report(1, 3, [2, 4, 8, 16, 32]))
    if suite in ("conjectures", "all"):
        out += [crosspolytope_remark_check(n) for n in (3, 4, 5)]
        out.append(real_root_frontier_scan(standard_gallery()))
    return out


def run_suite(suite: str, polytopes: Sequence[LatticePolytope] | None = None) -> list[VerificationReport]:
    """Run ``suite`` on the given polytopes, or on the whole gallery plus family checks.

    With explicit polytopes every applicable check must run; if none applies
    the error of the first check is raised.
    """
    if suite not in SUITES:
        raise ParameterConstraint(f"unknown suite {suite!r}; choose from {', '.join(SUITE_NAMES)}")
    checks = SUITES[suite]
    reports: list[VerificationReport] = []
    if polytopes is None:
        for P in standard_gallery():
            reports += [fn(P) for fn, ok in checks if ok(P)]
        reports += global_reports(suite)
    else:
        for P in polytopes:
            chosen = [fn for fn, ok in checks if ok(P)]
            if not chosen:
                checks[0][0](P)  # raises the specific applicability error
                raise EhrhartError(f"suite {suite!r} does not apply to {P.name}")
            reports += [fn(P) for fn in chosen]
    return sort_reports(reports)


def suite_passed(reports: Iterable[VerificationReport]) -> bool:
    return all(r.passed for r in reports if not r.conjecture)


# operation names of the published interface
verify_lemma_3_1 = verify_pyramid_lemma
verify_prop_1_5 = verify_real_root_bound
verify_thm_1_6_iii = verify_interior_volume_bound
proposition_1_1_matrix = equality_case_matrix
