import math
from fractions import Fraction

import numpy as np
import pytest

from ehrhart_minima import gallery as G
from ehrhart_minima.ehrhart import (EhrhartPolynomial, coefficient_identities, ehrhart_polynomial, evaluate,
                                    interpolate, quadratic_rootset, reciprocity_check, roots)
from ehrhart_minima.errors import InconsistentCounts
from ehrhart_minima.geometry import cartesian_product, count_lattice_points, dilate

F = Fraction


def coeffs(P):
    return list(ehrhart_polynomial(P).coefficients)


def test_known_polynomials():
    assert coeffs(G.cube(2)) == [1, 4, 4]
    assert coeffs(G.cross_polytope(3)) == [1, F(8, 3), 2, F(4, 3)]
    assert coeffs(G.reeve(4)) == [1, F(4, 3), 1, F(2, 3)]
    assert coeffs(G.hexagon_H()) == [1, 3, 3]
    assert coeffs(G.reeve(12))[1] == 0


def test_evaluate():
    E = EhrhartPolynomial((F(1), F(4), F(4)))
    assert evaluate(E, 2) == 25
    assert evaluate(ehrhart_polynomial(G.hexagon_H()), -1) == 1
    assert evaluate(ehrhart_polynomial(G.kleetope(2, 3)), 0) == 1
    assert abs(evaluate(E, complex(-0.5, 0))) < 1e-15


def test_interpolate_from_two_counts():
    assert interpolate([9, 25]).coefficients == (1, 4, 4)


@pytest.mark.parametrize("P", [G.kleetope(2, 3), G.reeve(5), G.hexagon_tilde(), G.prism(G.scott_triangle())])
def test_interpolation_beyond_nodes(P):
    E = ehrhart_polynomial(P)
    for k in range(1, P.dimension + 4):
        assert evaluate(E, k) == count_lattice_points(dilate(P, k))


def test_reciprocity_examples():
    for P, k in [(G.simplex(2), 2), (G.cube(2), 1), (G.reeve(5), 3)]:
        r = reciprocity_check(P, k)
        assert r.passed and r.lhs == r.rhs == k


def test_coefficient_identities():
    E = ehrhart_polynomial(G.cube(3))
    assert (E[3], E[2]) == (8, 12)
    E = ehrhart_polynomial(G.cross_polytope(3))
    assert (E[2], E[1]) == (2, F(8, 3))
    assert ehrhart_polynomial(G.kleetope(2, 3))[2] == 24
    assert coefficient_identities(G.hexagon_tilde()).passed


def test_cross_check_detects_inconsistency(monkeypatch):
    import ehrhart_minima.ehrhart as eh
    eh._ehrhart_cached.cache_clear()
    monkeypatch.setattr(eh, "normalized_surface", lambda P: F(-1))
    with pytest.raises(InconsistentCounts):
        eh.ehrhart_polynomial(G.cube(1))
    eh._ehrhart_cached.cache_clear()


def test_product_rule():
    for A, B in [(G.hexagon_H(), G.cube(1)), (G.simplex(2), G.simplex(2)), (G.diamond_K(), G.reeve(2))]:
        assert ehrhart_polynomial(cartesian_product(A, B)) == ehrhart_polynomial(A) * ehrhart_polynomial(B)


def test_simplex_and_cube_roots():
    rs = roots(ehrhart_polynomial(G.simplex(2)))
    assert rs.rational_roots == ((F(-2), 1), (F(-1), 1))
    rs = roots(ehrhart_polynomial(G.cube(2)))
    assert rs.rational_roots == ((F(-1, 2), 2),)
    assert rs.gammas == [0.5, 0.5]


def test_hexagon_roots_on_circle():
    rs = roots(ehrhart_polynomial(G.hexagon_H()))
    assert not rs.rational_roots
    for re, im in rs.complex_roots:
        assert abs(re + 0.5) < 1e-15
        assert abs(abs(im) - 1 / (2 * math.sqrt(3))) < 1e-15
        assert abs(abs(complex(re, im) + 1 / 3) - 1 / 3) < 1e-15


@pytest.mark.parametrize("P", G.standard_gallery(), ids=lambda P: P.name)
def test_root_set_invariants(P):
    E = ehrhart_polynomial(P)
    rs = roots(E)
    n = P.dimension
    assert rs.multiplicity == n
    ims = sorted(im for _, im in rs.complex_roots)
    assert np.allclose(ims, sorted(-x for x in ims))
    z = np.array(rs.all_roots())
    # product of gammas is 1/G_n, sum is G_(n-1)/G_n
    assert abs(np.prod(-z) - 1 / float(E[n])) < 1e-9 * max(1, 1 / float(E[n]))
    assert abs(np.sum(-z) - float(E[n - 1] / E[n])) < 1e-9
    assert np.all(np.abs(z) <= math.factorial(n + 1) + 1)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_cross_polytope_functional_equation_and_root_line(n):
    E = ehrhart_polynomial(G.cross_polytope(n))
    for s in [F(k, 7) - 2 for k in range(10)]:
        assert evaluate(E, -s) == (-1) ** n * evaluate(E, s - 1)
    assert all(abs(z.real + 0.5) < 1e-9 for z in roots(E).all_roots())


def test_quadratic_rootset():
    assert quadratic_rootset(F(9, 2), F(9, 2)).rational_roots == ((F(-2, 3), 1), (F(-1, 3), 1))
    assert quadratic_rootset(F(4), F(4)).rational_roots == ((F(-1, 2), 2),)
    rs = quadratic_rootset(F(3), F(3))
    assert rs.complex_roots[0][0] == -0.5
    rs = quadratic_rootset(F(5), F(5))
    assert not rs.rational_roots and all(im == 0 for _, im in rs.complex_roots)


def test_json_shapes():
    E = ehrhart_polynomial(G.cross_polytope(2))
    assert E.to_json() == [[1, 1], [2, 1], [2, 1]]
    assert roots(ehrhart_polynomial(G.simplex(2))).to_json() == {"rational": [[-2, 1, 1], [-1, 1, 1]], "complex": []}
