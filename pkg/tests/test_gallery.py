from fractions import Fraction

import pytest

from ehrhart_minima import gallery as G
from ehrhart_minima.ehrhart import ehrhart_polynomial, roots
from ehrhart_minima.errors import DimensionTooLarge, ParameterConstraint
from ehrhart_minima.geometry import count_lattice_points, volume

F = Fraction


def test_basic_vertex_lists():
    assert set(G.cube(2).vertices) == {(1, 1), (1, -1), (-1, 1), (-1, -1)}
    assert len(G.cross_polytope(3).vertices) == 6
    assert set(G.simplex(3).vertices) == {(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)}
    assert G.box([1, 1]) == G.cube(2)
    assert volume(G.box([1, 2])) == 8


def test_dimension_limits():
    with pytest.raises(DimensionTooLarge):
        G.cube(7)
    with pytest.raises(DimensionTooLarge):
        G.kleetope(1, 5)


@pytest.mark.parametrize("n,l", [(2, 1), (2, 3), (3, 5), (2, 7)])
def test_interior_box(n, l):
    assert count_lattice_points(G.interior_box(n, l), "interior") == l


def test_reeve():
    assert volume(G.reeve(1)) == F(1, 6)
    for q in range(3, 9):
        assert any(r == -1 for r, _ in roots(ehrhart_polynomial(G.reeve(q))).rational_roots)
    assert count_lattice_points(G.reeve_general(4, 3), "interior") == 0


def test_kleetope_closed_forms():
    for l, n in [(1, 2), (2, 3), (3, 3), (2, 4)]:
        P = G.kleetope(l, n)
        E = ehrhart_polynomial(P)
        assert E[n] == (2 * l) ** n * (1 + F(1, l))
        assert E[n - 1] == 2 * n * (2 * l) ** (n - 2)


@pytest.mark.parametrize("p,q,k", [(1, 3, 2), (1, 3, 8), (1, 4, 3), (2, 5, 3), (1, 2, 2)])
def test_hexagon_hk(p, q, k):
    E = ehrhart_polynomial(G.hexagon_Hk(p, q, k))
    alpha = F(p, q - p)
    assert E[2] == 2 * (k * alpha + k)
    assert E[1] == 2 * (k * alpha + 1)


def test_hexagon_hk_constraints():
    with pytest.raises(ParameterConstraint):
        G.hexagon_Hk(1, 3, 3)
    with pytest.raises(ParameterConstraint):
        G.hexagon_Hk(2, 3, 2)


@pytest.mark.parametrize("q", [1, 2, 5])
def test_triangle_tq(q):
    E = ehrhart_polynomial(G.triangle_Tq(q))
    assert (E[2], E[1]) == (q + F(1, 2), F(3, 2))


def test_scott_roots():
    rs = roots(ehrhart_polynomial(G.scott_triangle()))
    assert rs.rational_roots == ((F(-2, 3), 1), (F(-1, 3), 1))


def test_named_planar():
    assert ehrhart_polynomial(G.diamond_K())[2] == 4
    assert count_lattice_points(G.hexagon_tilde()) - count_lattice_points(G.hexagon_tilde(), "interior") == 12


def test_inline_specs():
    assert G.parse_inline("gallery:cube:n=3") == G.cube(3)
    assert G.parse_inline("gallery:box:m=1/2") == G.box([1, 2])
    P = G.parse_inline("gallery:product:left=hex-h,right=cube,right.n=2")
    assert P == G.product(G.hexagon_H(), G.cube(2))
    assert G.parse_inline("gallery:prism:base=diamond") == G.prism(G.diamond_K())
    with pytest.raises(ParameterConstraint):
        G.parse_inline("gallery:nothing")
    with pytest.raises(ParameterConstraint):
        G.parse_inline("gallery:cube")
    with pytest.raises(ParameterConstraint):
        G.parse_inline("gallery:cube:n=2,q=3")


def test_every_family_is_buildable():
    samples = {"cube": {"n": 2}, "cross": {"n": 2}, "simplex": {"n": 2}, "box": {"m": "1,2"},
               "reeve": {"q": 2}, "reeve-general": {"n": 4, "q": 2}, "kleetope": {"l": 1, "n": 2},
               "hex-hk": {"p": 1, "q": 3, "k": 2}, "tri-q": {"q": 2},
               "prism": {"base": G.cube(1)}, "product": {"left": G.cube(1), "right": G.simplex(1)}}
    for family in G.FAMILIES:
        assert G.build(family, **samples.get(family, {})).dimension >= 1


def test_gallery_members_are_valid():
    for P in G.standard_gallery():
        assert P.dimension == len(P.vertices[0])
        for h in P.facets:
            assert sum(1 for v in P.vertices if h.value(v) == h.offset) >= P.dimension
    assert all(P.symmetric for P in G.symmetric_gallery())
