"""Lattice polygon enumeration and the planar root atlas."""
from __future__ import annotations

import csv
import io
import math
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .ehrhart import RootSet, ehrhart_polynomial, quadratic_rootset, roots
from .errors import BudgetExceeded, DegenerateInput, ParameterConstraint
from .geometry import IntVector, LatticePolytope, hull
from .report import VerificationReport, aggregate

MAX_BOX = 4
MAX_VERTICES = 8
DEFAULT_BUDGET = 5_000_000
CSV_COLUMNS = ("name", "g2num", "g2den", "g1num", "g1den", "boundary", "interior", "re", "im")


@dataclass(frozen=True)
class PolygonRecord:
    vertices: tuple[IntVector, ...]
    g2: Fraction
    g1: Fraction
    interior: int
    roots: RootSet

    @property
    def boundary(self) -> int:
        return int(2 * self.g1)

    @property
    def name(self) -> str:
        if not self.vertices:
            return f"grid(b={self.boundary},i={self.interior})"
        return " ".join(f"{x}:{y}" for x, y in self.vertices)

    def to_json(self) -> dict:
        return {"vertices": [list(v) for v in self.vertices], "g2": self.g2, "g1": self.g1,
                "interior": self.interior, "boundary": self.boundary, "roots": self.roots}


def record_from_counts(vertices: Sequence[IntVector], twice_area: int, boundary: int) -> PolygonRecord:
    g2 = Fraction(twice_area, 2)
    g1 = Fraction(boundary, 2)
    interior = int(g2 - g1 + 1)
    return PolygonRecord(tuple(vertices), g2, g1, interior, quadratic_rootset(g2, g1))


# ---------------------------------------------------------------------------
# enumeration


def _cross(o, a, b) -> int:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _search_anchor(args) -> tuple[dict, int]:
    """All convex polygons whose lowest-then-leftmost vertex is ``anchor``.

    Vertices are added counterclockwise with strictly increasing angle about
    the anchor and strictly left turns, so every polygon appears once.
    Returns the smallest representative per ``(2*area, boundary)`` and the
    number of polygons visited.
    """
    anchor, side, max_vertices, budget = args
    ax, ay = anchor
    cand = [(x, y) for x in range(side + 1) for y in range(side + 1)
            if y > ay or (y == ay and x > ax)]
    cand.sort(key=lambda p: (math.atan2(p[1] - ay, p[0] - ax), (p[0] - ax) ** 2 + (p[1] - ay) ** 2))
    best: dict[tuple[int, int], tuple] = {}
    visited = 0

    def edge_points(p, q) -> int:
        return math.gcd(abs(p[0] - q[0]), abs(p[1] - q[1]))

    def extend(chain: list, start: int, area2: int, bnd: int) -> None:
        nonlocal visited
        last = chain[-1]
        if len(chain) >= 3 and _cross(chain[-2], last, anchor) > 0 and _cross(last, anchor, chain[1]) > 0:
            visited += 1
            if visited > budget:
                raise BudgetExceeded(f"more than {budget} candidate polygons")
            key = (area2, bnd + edge_points(last, anchor))
            rep = (len(chain), tuple(chain))
            if key not in best or rep < best[key]:
                best[key] = rep
        if len(chain) == max_vertices:
            return
        for i in range(start, len(cand)):
            p = cand[i]
            if len(chain) >= 2 and _cross(chain[-2], last, p) <= 0:
                continue
            if _cross(anchor, last, p) <= 0 and len(chain) >= 2:
                continue
            chain.append(p)
            extend(chain, i + 1, area2 + _cross(anchor, last, p), bnd + edge_points(last, p))
            chain.pop()

    extend([anchor], 0, 0, 0)
    return best, visited


def enumerate_polygons(box_side: int, max_vertices: int = MAX_VERTICES, *, workers: int = 1,
                       budget: int = DEFAULT_BUDGET) -> list[PolygonRecord]:
    """One record per Ehrhart class ``(g2, g1)`` of convex lattice polygons in ``[0, B]^2``.

    The representative of each class is the one with fewest vertices, then
    the lexicographically smallest counterclockwise vertex list.
    """
    if not 1 <= box_side <= MAX_BOX:
        raise ParameterConstraint(f"box side must lie in [1, {MAX_BOX}]")
    if not 3 <= max_vertices <= MAX_VERTICES:
        raise ParameterConstraint(f"max vertices must lie in [3, {MAX_VERTICES}]")
    anchors = [(x, y) for y in range(box_side + 1) for x in range(box_side + 1)]
    jobs = [(a, box_side, max_vertices, budget) for a in anchors]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_search_anchor, jobs))
    else:
        results = [_search_anchor(j) for j in jobs]
    if sum(v for _, v in results) > budget:
        raise BudgetExceeded(f"more than {budget} candidate polygons")
    merged: dict[tuple[int, int], tuple] = {}
    for best, _ in results:
        for key, rep in best.items():
            if key not in merged or rep < merged[key]:
                merged[key] = rep
    records = [record_from_counts(rep[1], *key) for key, rep in merged.items()]
    return sorted(records, key=lambda r: (r.g2, r.g1))


def candidate_grid(max_boundary: int, max_interior: int) -> list[PolygonRecord]:
    """Classes allowed by Pick positivity and, for one interior point, Scott's bound.

    These pairs are not all known to be realised by lattice polygons.
    """
    out = []
    for i in range(max_interior + 1):
        for m in range(3, max_boundary + 1):
            if i == 1 and m > 9:
                continue
            out.append(record_from_counts((), 2 * i + m - 2, m))
    return sorted(out, key=lambda r: (r.g2, r.g1))


# ---------------------------------------------------------------------------
# CSV


def _fmt(x: float) -> str:
    x = float(x)
    return format(0.0 if x == 0 else x, ".17g")


def root_rows(records: Iterable[PolygonRecord]) -> list[list[str]]:
    rows = []
    for r in sorted(records, key=lambda r: (r.g2, r.g1, r.vertices)):
        pts = sorted(r.roots.all_roots(), key=lambda z: (z.real, z.imag))
        for z in pts:
            rows.append([r.name, str(r.g2.numerator), str(r.g2.denominator), str(r.g1.numerator),
                         str(r.g1.denominator), str(r.boundary), str(r.interior), _fmt(z.real), _fmt(z.imag)])
    return rows


def roots_csv(records: Iterable[PolygonRecord], realized: set | None = None) -> str:
    """One row per root.  With ``realized`` given (grid mode) an ``unrealized`` column is added."""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    records = list(records)
    if realized is None:
        w.writerow(CSV_COLUMNS)
        w.writerows(root_rows(records))
    else:
        w.writerow(CSV_COLUMNS + ("unrealized",))
        for r in sorted(records, key=lambda r: (r.g2, r.g1, r.vertices)):
            flag = "no" if (r.g2, r.g1) in realized else "maybe"
            w.writerows(row + [flag] for row in root_rows([r]))
    return buf.getvalue()


# ---------------------------------------------------------------------------
# interior-free polygons


def thin_triangle(l: int) -> LatticePolytope:
    """``conv{0, l e_1, e_2}``: no interior points and ``l + 2`` boundary points."""
    return hull([(0, 0), (l, 0), (0, 1)], f"thin({l})")


def gamma20_catalogue(l_max: int, records: Iterable[PolygonRecord] = ()) -> VerificationReport:
    """Realise ``-2/l`` for each ``l <= l_max`` and check every interior-free record."""
    sub, witnesses = {}, {}
    for l in range(1, l_max + 1):
        P = thin_triangle(l)
        rs = roots(ehrhart_polynomial(P))
        sub[f"l={l}"] = any(r == Fraction(-2, l) for r, _ in rs.rational_roots)
        witnesses[str(l)] = {"vertices": [list(v) for v in P.vertices], "roots": rs}
    for rec in records:
        if rec.interior == 0:
            ok = not rec.roots.complex_roots and all(
                r == -1 or (r < 0 and (-2 / r).denominator == 1) for r, _ in rec.roots.rational_roots)
            sub[f"class({rec.g2},{rec.g1})"] = ok
    return aggregate("gamma20_catalogue", f"l<={l_max}", sub, details={"witnesses": witnesses})


# ---------------------------------------------------------------------------
# random symmetric polytopes


def sample_symmetric(count: int, dims: Sequence[int] = (2, 3), bound: int = 5, seed: int = 0,
                     max_generators: int = 4) -> list[LatticePolytope]:
    """Rejection-sample ``conv{±p_1, ..., ±p_k}`` with ``|coordinates| <= bound``.

    Dimensions cycle through ``dims``; degenerate draws are discarded.
    """
    rng = random.Random(seed)
    out: list[LatticePolytope] = []
    while len(out) < count:
        n = dims[len(out) % len(dims)]
        k = rng.randint(n, max(n, max_generators))
        gens = [tuple(rng.randint(-bound, bound) for _ in range(n)) for _ in range(k)]
        pts = gens + [tuple(-c for c in g) for g in gens]
        try:
            P = hull(pts, f"sample{len(out)}(n={n})")
        except DegenerateInput:
            continue
        out.append(P)
    return out
