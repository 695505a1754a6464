"""Named lattice polytopes used as ground-truth fixtures.

Each constructor returns a :class:`~ehrhart_minima.geometry.LatticePolytope`
built through :func:`~ehrhart_minima.geometry.hull`, so the vertex list is
always re-derived rather than trusted.
"""
from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Callable

from .errors import DimensionTooLarge, ParameterConstraint
from .geometry import MAX_DIM, LatticePolytope, cartesian_product, hull


def _unit(n: int, i: int, scale: int = 1) -> tuple[int, ...]:
    return tuple(scale if j == i else 0 for j in range(n))


def _check_dim(n: int, hi: int = MAX_DIM, lo: int = 1) -> None:
    if not lo <= n <= hi:
        raise DimensionTooLarge(f"dimension must lie in [{lo}, {hi}], got {n}")


def cube(n: int) -> LatticePolytope:
    _check_dim(n)
    return hull(itertools.product((-1, 1), repeat=n), f"cube({n})")


def cross_polytope(n: int) -> LatticePolytope:
    _check_dim(n)
    return hull([_unit(n, i, s) for i in range(n) for s in (1, -1)], f"cross({n})")


def simplex(n: int) -> LatticePolytope:
    _check_dim(n)
    return hull([(0,) * n] + [_unit(n, i) for i in range(n)], f"simplex({n})")


def box(m) -> LatticePolytope:
    """The box ``|x_i| <= m_i``."""
    m = [int(x) for x in m]
    if not m or any(x < 1 for x in m):
        raise ParameterConstraint("box edge parameters must be positive integers")
    _check_dim(len(m))
    label = ",".join(map(str, m))
    return hull(itertools.product(*[(-x, x) for x in m]), f"box({label})")


def interior_box(n: int, l: int) -> LatticePolytope:
    """``|x_1| <= (l+1)/2``, ``|x_i| <= 1``: exactly ``l`` interior points for odd ``l``."""
    if l < 1 or l % 2 == 0:
        raise ParameterConstraint("interior_box needs an odd l >= 1")
    return box([(l + 1) // 2] + [1] * (n - 1)).renamed(f"Q({n},{l})")


def reeve(q: int) -> LatticePolytope:
    if q < 1:
        raise ParameterConstraint("Reeve parameter q must be >= 1")
    return hull([(0, 0, 0), (1, 0, 0), (0, 1, 0), (1, 1, q)], f"reeve({q})")


def reeve_general(n: int, q: int) -> LatticePolytope:
    """``conv{0, e_1, ..., e_(n-1), e_1 + ... + e_(n-1) + q e_n}``."""
    _check_dim(n, lo=2)
    if q < 1:
        raise ParameterConstraint("Reeve parameter q must be >= 1")
    apex = (1,) * (n - 1) + (q,)
    return hull([(0,) * n] + [_unit(n, i) for i in range(n - 1)] + [apex], f"reeve({n},{q})")


def kleetope(l: int, n: int) -> LatticePolytope:
    """``conv{l C_n, ±(l+1) e_i}``: a shallow pyramid on every cube facet."""
    if l < 1:
        raise ParameterConstraint("kleetope needs l >= 1")
    _check_dim(n, hi=4, lo=2)
    pts = [tuple(l * c for c in v) for v in itertools.product((-1, 1), repeat=n)]
    pts += [_unit(n, i, s * (l + 1)) for i in range(n) for s in (1, -1)]
    return hull(pts, f"kleetope({l},{n})")


def hexagon_H() -> LatticePolytope:
    return hull([(1, 0), (-1, 0), (0, 1), (0, -1), (1, 1), (-1, -1)], "H")


def hexagon_tilde() -> LatticePolytope:
    return hull([(3, -3), (-3, 3), (3, 5), (-3, -5), (5, 3), (-5, -3)], "H~")


def hexagon_Hk(p: int, q: int, k: int) -> LatticePolytope:
    """``conv{±(k,0), (±k a, ±1)}`` with ``a = p/(q-p)``.

    Needs ``0 < p/q <= 1/2`` and ``k a`` integral; at ``p/q = 1/2`` the
    hexagon degenerates to the rectangle ``[-k, k] x [-1, 1]``.
    """
    if not (0 < p and 2 * p <= q):
        raise ParameterConstraint("hexagon_Hk needs 0 < p/q <= 1/2")
    alpha = Fraction(p, q - p)
    ka = k * alpha
    if k < 1 or ka.denominator != 1:
        raise ParameterConstraint(f"k * p/(q-p) must be a positive integer, got {ka}")
    a = int(ka)
    pts = [(k, 0), (-k, 0), (a, 1), (-a, 1), (a, -1), (-a, -1)]
    return hull(pts, f"Hk({p},{q},{k})")


def diamond_K() -> LatticePolytope:
    return hull([(1, 0), (-1, 0), (0, 2), (0, -2)], "K")


def triangle_Tq(q: int) -> LatticePolytope:
    if q < 1:
        raise ParameterConstraint("triangle_Tq needs q >= 1")
    return hull([(-1, 0), (1, -1), (0, q)], f"T({q})")


def scott_triangle() -> LatticePolytope:
    return hull([(0, 0), (3, 0), (0, 3)], "scott")


def prism(P: LatticePolytope) -> LatticePolytope:
    """``P x [-1, 1]``; adds the root ``-1/2``."""
    return cartesian_product(P, cube(1), name=f"prism({P.name})")


def product(P1: LatticePolytope, P2: LatticePolytope) -> LatticePolytope:
    return cartesian_product(P1, P2)


# ---------------------------------------------------------------------------
# registry for the command line and inline specs


def _ints(v) -> list[int]:
    if isinstance(v, (list, tuple)):
        return [int(x) for x in v]
    return [int(x) for x in str(v).replace("/", ",").split(",") if x]


FAMILIES: dict[str, tuple[Callable[..., LatticePolytope], tuple[str, ...]]] = {
    "cube": (lambda n: cube(int(n)), ("n",)),
    "cross": (lambda n: cross_polytope(int(n)), ("n",)),
    "simplex": (lambda n: simplex(int(n)), ("n",)),
    "box": (lambda m: box(_ints(m)), ("m",)),
    "reeve": (lambda q: reeve(int(q)), ("q",)),
    "reeve-general": (lambda n, q: reeve_general(int(n), int(q)), ("n", "q")),
    "kleetope": (lambda l, n: kleetope(int(l), int(n)), ("l", "n")),
    "hex-h": (hexagon_H, ()),
    "hex-tilde": (hexagon_tilde, ()),
    "hex-hk": (lambda p, q, k: hexagon_Hk(int(p), int(q), int(k)), ("p", "q", "k")),
    "diamond": (diamond_K, ()),
    "tri-q": (lambda q: triangle_Tq(int(q)), ("q",)),
    "scott": (scott_triangle, ()),
    "prism": (prism, ("base",)),
    "product": (product, ("left", "right")),
}


def build(family: str, **params) -> LatticePolytope:
    """Construct a gallery family from string or polytope parameters."""
    if family not in FAMILIES:
        raise ParameterConstraint(f"unknown gallery family {family!r}")
    ctor, names = FAMILIES[family]
    missing = [k for k in names if k not in params]
    if missing:
        raise ParameterConstraint(f"{family} needs parameters: {', '.join(missing)}")
    extra = sorted(set(params) - set(names))
    if extra:
        raise ParameterConstraint(f"{family} does not take: {', '.join(extra)}")
    return ctor(*(params[k] for k in names))


def parse_inline(spec: str) -> LatticePolytope:
    """Build from ``gallery:<family>[:k=v,...]``.

    List values use ``/`` (``gallery:box:m=1/2``).  The polytope arguments
    of ``prism`` and ``product`` name a family and take dotted parameters,
    e.g. ``gallery:product:left=hex-h,right=cube,right.n=2``.
    """
    body = spec[len("gallery:"):] if spec.startswith("gallery:") else spec
    family, _, rest = body.partition(":")
    raw: dict[str, str] = {}
    for item in filter(None, rest.split(",")):
        key, eq, value = item.partition("=")
        if not eq:
            raise ParameterConstraint(f"malformed parameter {item!r} in {spec!r}")
        raw[key.strip()] = value.strip()
    poly_args = [k for k in FAMILIES.get(family, (None, ()))[1] if k in ("base", "left", "right")]
    params: dict = {}
    for key in poly_args:
        if key not in raw:
            continue
        prefix = key + "."
        sub = {k[len(prefix):]: v for k, v in raw.items() if k.startswith(prefix)}
        inner = raw[key] + (":" + ",".join(f"{k}={v}" for k, v in sub.items()) if sub else "")
        params[key] = parse_inline(inner)
    for k, v in raw.items():
        if k in poly_args or any(k.startswith(p + ".") for p in poly_args):
            continue
        params[k] = v
    return build(family, **params)


def symmetric_gallery() -> list[LatticePolytope]:
    """Every 0-symmetric fixture exercised by the verification harness."""
    H, Ht, C1, C2 = hexagon_H(), hexagon_tilde(), cube(1), cube(2)
    out = [cube(n) for n in range(1, 5)]
    out += [cross_polytope(n) for n in range(2, 6)]
    out += [box([1, 2]), box([1, 3]), box([2, 3]), box([1, 1, 2]), box([1, 2, 3])]
    out += [interior_box(n, l) for n in (2, 3) for l in (3, 5)]
    out += [H, Ht, diamond_K()]
    out += [kleetope(l, n) for n in (2, 3) for l in (1, 2, 3)] + [kleetope(2, 4)]
    out += [hexagon_Hk(1, 3, k) for k in (2, 4, 8)] + [hexagon_Hk(1, 4, 3)]
    out += [
        product(H, C1), product(H, C2), product(Ht, C1), product(Ht, C2),
        prism(diamond_K()), prism(cross_polytope(2)),
    ]
    return out


def standard_gallery() -> list[LatticePolytope]:
    """Every fixture (symmetric or not) with dimension at most 4."""
    out = [P for P in symmetric_gallery() if P.dimension <= 4]
    out += [simplex(n) for n in range(1, 5)]
    out += [reeve(q) for q in (1, 2, 3, 4, 6, 12, 20)]
    out += [reeve_general(4, q) for q in (1, 2, 3)]
    out += [triangle_Tq(q) for q in (1, 2, 3)]
    out += [scott_triangle(), prism(simplex(2)), prism(scott_triangle()), product(simplex(2), simplex(2))]
    return out
