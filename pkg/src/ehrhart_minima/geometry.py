"""Exact lattice polytopes: hulls, facets, volumes and lattice-point counts.

Everything here is integer or :class:`fractions.Fraction` arithmetic.  Facets
are found by testing every hyperplane spanned by ``n`` input points, which is
affordable for the small dimensions (``n <= 6``) and vertex counts handled
by this package.  The integer-heavy inner loops (hyperplane normals, side
tests, slab counting) are vectorised with numpy ``int64`` arrays.
"""
from __future__ import annotations

import itertools
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from .errors import DegenerateInput, DimensionTooLarge

MAX_DIM = 6
_COMBO_CHUNK = 20000
_SLAB_COLUMNS = 1 << 16

IntVector = tuple[int, ...]
RationalPoint = tuple[Fraction, ...]


@dataclass(frozen=True)
class HalfSpace:
    """The inequality ``normal . x <= offset`` with a primitive integer normal."""

    normal: IntVector
    offset: Fraction

    def value(self, x: Sequence) -> Fraction:
        return sum((a * xi for a, xi in zip(self.normal, x)), Fraction(0))

    def slack(self, x: Sequence) -> Fraction:
        return self.offset - self.value(x)


@dataclass(frozen=True)
class PyramidDecomposition:
    """Pyramids over each facet with a common interior apex.

    ``areas[j]`` is the facet volume divided by the Euclidean norm of its
    primitive normal, obtained as ``n * volumes[j] / height`` so that no
    square root is ever taken.
    """

    apex: RationalPoint
    volumes: tuple[Fraction, ...]
    areas: tuple[Fraction, ...]

    @property
    def total(self) -> Fraction:
        return sum(self.volumes, Fraction(0))


class LatticePolytope:
    """A full-dimensional convex polytope with integral vertices.

    Instances are normally produced by :func:`hull`; the constructor trusts
    the caller to pass the exact vertex set together with an irredundant
    primitive facet description.  Equality and hashing use the vertex set
    only, the name is a label.
    """

    def __init__(self, vertices: Iterable[Sequence[int]], facets: Iterable[HalfSpace], name: str = ""):
        self.vertices: tuple[IntVector, ...] = tuple(sorted(tuple(int(c) for c in v) for v in vertices))
        self.facets: tuple[HalfSpace, ...] = tuple(sorted(facets, key=lambda h: (h.normal, h.offset)))
        self.name = name

    def __repr__(self) -> str:
        return f"LatticePolytope({self.name!r}, n={self.dimension}, vertices={len(self.vertices)}, facets={len(self.facets)})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LatticePolytope):
            return NotImplemented
        return self.vertices == other.vertices

    def __hash__(self) -> int:
        return hash(self.vertices)

    @property
    def dimension(self) -> int:
        return len(self.vertices[0])

    @cached_property
    def symmetric(self) -> bool:
        vs = set(self.vertices)
        return all(tuple(-c for c in v) in vs for v in vs)

    @cached_property
    def centroid(self) -> RationalPoint:
        k = len(self.vertices)
        return tuple(Fraction(sum(col), k) for col in zip(*self.vertices))

    @cached_property
    def facet_vertex_sets(self) -> tuple[frozenset[int], ...]:
        return tuple(
            frozenset(i for i, v in enumerate(self.vertices) if h.value(v) == h.offset)
            for h in self.facets
        )

    def renamed(self, name: str) -> "LatticePolytope":
        return LatticePolytope(self.vertices, self.facets, name)

    def contains(self, x: Sequence, strict: bool = False) -> bool:
        if strict:
            return all(h.value(x) < h.offset for h in self.facets)
        return all(h.value(x) <= h.offset for h in self.facets)

    @cached_property
    def pyramids(self) -> PyramidDecomposition:
        return pyramid_decomposition(self)

    @cached_property
    def volume(self) -> Fraction:
        return self.pyramids.total


# ---------------------------------------------------------------------------
# exact linear algebra helpers


def rank(rows: Sequence[Sequence]) -> int:
    """Rank of a rational matrix by fraction-exact Gaussian elimination."""
    m = [[Fraction(x) for x in r] for r in rows]
    if not m:
        return 0
    ncols = len(m[0])
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        for i in range(r + 1, len(m)):
            if m[i][c] != 0:
                f = m[i][c] / m[r][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        r += 1
        if r == len(m):
            break
    return r


def det(rows: Sequence[Sequence]) -> Fraction:
    m = [[Fraction(x) for x in r] for r in rows]
    n = len(m)
    result = Fraction(1)
    for c in range(n):
        pivot = next((i for i in range(c, n) if m[i][c] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != c:
            m[c], m[pivot] = m[pivot], m[c]
            result = -result
        result *= m[c][c]
        for i in range(c + 1, n):
            if m[i][c] != 0:
                f = m[i][c] / m[c][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[c])]
    return result


def affine_dimension(points: Sequence[Sequence]) -> int:
    if not points:
        return -1
    p0 = points[0]
    return rank([[a - b for a, b in zip(p, p0)] for p in points[1:]])


def _int_det(m: np.ndarray) -> np.ndarray:
    """Determinants of a stack of small integer matrices by cofactor expansion."""
    k = m.shape[-1]
    if k == 0:
        return np.ones(m.shape[:-2], dtype=np.int64)
    if k == 1:
        return m[..., 0, 0]
    if k == 2:
        return m[..., 0, 0] * m[..., 1, 1] - m[..., 0, 1] * m[..., 1, 0]
    total = np.zeros(m.shape[:-2], dtype=np.int64)
    for c in range(k):
        term = m[..., 0, c] * _int_det(np.delete(m[..., 1:, :], c, axis=-1))
        total = total + term if c % 2 == 0 else total - term
    return total


def _hyperplane_normals(diffs: np.ndarray) -> np.ndarray:
    """Generalised cross products of the ``n-1`` rows of each ``(n-1, n)`` block."""
    n = diffs.shape[-1]
    cols = []
    for k in range(n):
        d = _int_det(np.delete(diffs, k, axis=-1))
        cols.append(d if k % 2 == 0 else -d)
    return np.stack(cols, axis=-1)


# ---------------------------------------------------------------------------
# hull and facets


def _facets_of_points(pts: np.ndarray) -> list[HalfSpace]:
    npts, n = pts.shape
    if n == 1:
        lo, hi = int(pts[:, 0].min()), int(pts[:, 0].max())
        return [HalfSpace((-1,), Fraction(-lo)), HalfSpace((1,), Fraction(hi))]
    found: set[tuple[IntVector, int]] = set()
    combos = itertools.combinations(range(npts), n)
    while True:
        chunk = np.array(list(itertools.islice(combos, _COMBO_CHUNK)), dtype=np.int64)
        if chunk.size == 0:
            break
        base = pts[chunk[:, 0]]
        diffs = pts[chunk[:, 1:]] - base[:, None, :]
        normals = _hyperplane_normals(diffs)
        keep = np.any(normals != 0, axis=1)
        normals, base = normals[keep], base[keep]
        if len(normals) == 0:
            continue
        normals //= np.gcd.reduce(np.abs(normals), axis=1)[:, None]
        offsets = np.einsum("ij,ij->i", normals, base)
        values = normals @ pts.T
        below = np.all(values <= offsets[:, None], axis=1)
        above = np.all(values >= offsets[:, None], axis=1)
        for a, b in zip(normals[below], offsets[below]):
            found.add((tuple(int(x) for x in a), int(b)))
        for a, b in zip(normals[above], offsets[above]):
            found.add((tuple(-int(x) for x in a), -int(b)))
    return [HalfSpace(a, Fraction(b)) for a, b in sorted(found)]


def hull(points: Iterable[Sequence[int]], name: str = "") -> LatticePolytope:
    """Convex hull of integer points, keeping exactly the extreme points."""
    uniq = sorted({tuple(int(c) for c in p) for p in points})
    if not uniq:
        raise DegenerateInput("empty point set")
    n = len(uniq[0])
    if any(len(p) != n for p in uniq):
        raise DegenerateInput("points of mixed dimension")
    if n > MAX_DIM:
        raise DimensionTooLarge(f"facet enumeration supports n <= {MAX_DIM}, got {n}")
    if affine_dimension(uniq) < n:
        raise DegenerateInput(f"affine hull of the points has dimension < {n}")
    pts = np.array(uniq, dtype=np.int64)
    facets = _facets_of_points(pts)
    vertices = []
    for p in uniq:
        tight = [h.normal for h in facets if h.value(p) == h.offset]
        if len(tight) >= n and rank(tight) == n:
            vertices.append(p)
    return LatticePolytope(vertices, facets, name)


def facets(P: LatticePolytope) -> tuple[HalfSpace, ...]:
    if P.dimension > MAX_DIM:
        raise DimensionTooLarge(f"facet enumeration supports n <= {MAX_DIM}")
    return P.facets


# ---------------------------------------------------------------------------
# volumes


def _centroid(points: Sequence[Sequence]) -> RationalPoint:
    k = len(points)
    return tuple(Fraction(sum(col), k) for col in zip(*points))


def _face_flags(P: LatticePolytope):
    """Return a generator of simplex chains refining a face of ``P``.

    A chain for a ``d``-face is ``[centroid(face), centroid(subface), ...,
    vertex]``; coning the apex over all chains of all facets triangulates P.
    """
    verts = P.vertices
    facet_sets = P.facet_vertex_sets
    cache: dict[tuple[frozenset[int], int], list[frozenset[int]]] = {}

    def subfaces(face: frozenset[int], d: int) -> list[frozenset[int]]:
        key = (face, d)
        if key not in cache:
            out = set()
            for fs in facet_sets:
                sub = face & fs
                if sub != face and len(sub) >= d and affine_dimension([verts[i] for i in sorted(sub)]) == d - 1:
                    out.add(sub)
            cache[key] = sorted(out, key=sorted)
        return cache[key]

    def flags(face: frozenset[int], d: int):
        if d == 0:
            (i,) = face
            yield [verts[i]]
            return
        c = _centroid([verts[i] for i in sorted(face)])
        for sub in subfaces(face, d):
            for chain in flags(sub, d - 1):
                yield [c] + chain

    return flags


def pyramid_decomposition(P: LatticePolytope, apex: Sequence | None = None) -> PyramidDecomposition:
    """Split ``P`` into pyramids over its facets with a common interior apex.

    The default apex is the vertex centroid.
    """
    n = P.dimension
    c = tuple(Fraction(x) for x in (apex if apex is not None else P.centroid))
    flags = _face_flags(P)
    fact = math.factorial(n)
    volumes, areas = [], []
    for h, fs in zip(P.facets, P.facet_vertex_sets):
        pyr = Fraction(0)
        for chain in flags(fs, n - 1):
            pyr += abs(det([[a - b for a, b in zip(p, c)] for p in chain]))
        pyr /= fact
        height = h.slack(c)
        volumes.append(pyr)
        areas.append(n * pyr / height)
    return PyramidDecomposition(c, tuple(volumes), tuple(areas))


def volume(P: LatticePolytope) -> Fraction:
    return P.volume


def normalized_surface(P: LatticePolytope) -> Fraction:
    """Half the sum of facet volumes measured in their own sublattices."""
    return sum(P.pyramids.areas, Fraction(0)) / 2


# ---------------------------------------------------------------------------
# lattice point counting


def _integer_constraints(P: LatticePolytope) -> tuple[np.ndarray, np.ndarray]:
    rows, rhs = [], []
    for h in P.facets:
        q = h.offset.denominator
        rows.append([a * q for a in h.normal])
        rhs.append(h.offset.numerator)
    return np.array(rows, dtype=np.int64), np.array(rhs, dtype=np.int64)


def _count_slab(A: np.ndarray, b: np.ndarray, ranges: list[range], strict: bool) -> int:
    """Count points of ``A x <= b`` over the grid ``ranges`` x (last coordinate free)."""
    grids = np.meshgrid(*[np.arange(r.start, r.stop, dtype=np.int64) for r in ranges], indexing="ij")
    xs = np.stack([g.ravel() for g in grids])  # (n-1, G)
    rest = b[:, None] - A[:, :-1] @ xs
    if strict:
        rest = rest - 1
    last = A[:, -1]
    ok = np.all(rest[last == 0] >= 0, axis=0)
    pos, neg = last > 0, last < 0
    hi = np.min(np.floor_divide(rest[pos], last[pos][:, None]), axis=0)
    lo = np.max(-np.floor_divide(rest[neg], -last[neg][:, None]), axis=0)
    return int(np.sum(np.where(ok, np.maximum(hi - lo + 1, 0), 0)))


def count_lattice_points(P: LatticePolytope, mode: str = "closed", workers: int = 1, slab_width: int | None = None) -> int:
    """Number of lattice points in ``P`` (``mode="closed"``) or its interior.

    The integer bounding box is cut into slabs along the first coordinate;
    the slab results are summed, so the answer does not depend on
    ``workers`` or ``slab_width``.
    """
    if mode not in ("closed", "interior"):
        raise ValueError(f"mode must be 'closed' or 'interior', not {mode!r}")
    strict = mode == "interior"
    A, b = _integer_constraints(P)
    n = P.dimension
    if n == 1:
        q = A[:, 0]
        r = b - 1 if strict else b
        hi = min(int(ri) // int(qi) for qi, ri in zip(q, r) if qi > 0)
        lo = max(-(int(ri) // int(-qi)) for qi, ri in zip(q, r) if qi < 0)
        return max(hi - lo + 1, 0)
    cols = list(zip(*P.vertices))
    ranges = [range(min(c), max(c) + 1) for c in cols[:-1]]
    if slab_width is None:
        per_row = max(1, math.prod(len(r) for r in ranges[1:]))
        slab_width = max(1, _SLAB_COLUMNS // per_row)
    first = ranges[0]
    slabs = [
        [range(s, min(s + slab_width, first.stop))] + ranges[1:]
        for s in range(first.start, first.stop, slab_width)
    ]
    if workers > 1 and len(slabs) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(lambda rg: _count_slab(A, b, rg, strict), slabs))
    else:
        parts = [_count_slab(A, b, rg, strict) for rg in slabs]
    return sum(parts)


# ---------------------------------------------------------------------------
# combinators


def dilate(P: LatticePolytope, k: int) -> LatticePolytope:
    if k < 1:
        raise ValueError("dilation factor must be a positive integer")
    if k == 1:
        return P
    return LatticePolytope(
        [tuple(k * c for c in v) for v in P.vertices],
        [HalfSpace(h.normal, k * h.offset) for h in P.facets],
        f"{k}*{P.name}" if P.name else "",
    )


def cartesian_product(P1: LatticePolytope, P2: LatticePolytope, name: str | None = None) -> LatticePolytope:
    n1, n2 = P1.dimension, P2.dimension
    verts = [u + v for u in P1.vertices for v in P2.vertices]
    hs = [HalfSpace(h.normal + (0,) * n2, h.offset) for h in P1.facets]
    hs += [HalfSpace((0,) * n1 + h.normal, h.offset) for h in P2.facets]
    if name is None:
        name = f"{P1.name} x {P2.name}"
    return LatticePolytope(verts, hs, name)


# ---------------------------------------------------------------------------
# file format


def to_json(P: LatticePolytope) -> dict:
    return {"name": P.name, "vertices": [list(v) for v in P.vertices]}


def from_json(obj: dict) -> LatticePolytope:
    if not isinstance(obj, dict) or "vertices" not in obj:
        raise DegenerateInput("polytope file needs a 'vertices' list")
    verts = obj["vertices"]
    if not isinstance(verts, list) or not all(isinstance(v, list) and all(isinstance(c, int) for c in v) for v in verts):
        raise DegenerateInput("vertices must be a list of integer lists")
    return hull(verts, str(obj.get("name", "")))
