import math
from fractions import Fraction

import pytest

from ehrhart_minima import gallery as G
from ehrhart_minima import theorems as T
from ehrhart_minima.errors import (DependentDirections, DimensionTooLarge, EhrhartError, Not2D, NotSymmetric,
                                   ParameterConstraint)
from ehrhart_minima.geometry import hull

F = Fraction


@pytest.mark.parametrize("P", [G.cube(2), G.cube(3), G.cross_polytope(3), G.cross_polytope(5), G.hexagon_H()],
                         ids=lambda P: P.name)
def test_main_theorem_tight(P):
    r = T.verify_main_theorem(P)
    assert r.passed and r.tight


def test_main_theorem_strict_values():
    r = T.verify_main_theorem(G.hexagon_tilde())
    assert (r.lhs, r.rhs, r.tight) == (F(6, 64), F(1, 4), False)
    with pytest.raises(NotSymmetric):
        T.verify_main_theorem(G.simplex(2))


def test_corollaries():
    r = T.verify_corollary_minima_analogue(G.cube(2))
    assert r.tight
    r = T.verify_corollary_minima_analogue(G.diamond_K())
    assert (r.lhs, r.rhs) == (F(1, 4), F(1, 2))
    r = T.verify_corollary_minima_analogue(G.hexagon_tilde())
    assert (r.lhs, r.rhs) == (F(6, 128), F(1, 8))
    r = T.verify_corollary_second_coeff(G.cube(3))
    assert r.tight and r.lhs == 12
    r = T.verify_corollary_second_coeff(G.cross_polytope(3))
    assert (r.lhs, r.rhs, r.tight) == (2, 12, False)
    r = T.verify_corollary_second_coeff(G.hexagon_H())
    assert (r.lhs, r.rhs) == (3, 4)


def test_corollary_second_coeff_unit_minima_bound():
    # with all minima equal to one the bound reads n 2^(n-1)
    for n in (2, 3, 4):
        assert T.verify_corollary_second_coeff(G.cross_polytope(n)).rhs == n * 2 ** (n - 1)


def test_minkowski_root_form():
    assert T.minkowski_root_form(G.box([1, 2])).details["tight_side"] == "upper"
    assert T.minkowski_root_form(G.cross_polytope(2)).details["tight_side"] == "lower"
    r = T.minkowski_root_form(G.hexagon_H())
    assert r.passed and r.details["tight_side"] == "neither"


def test_pyramid_lemma_cube_is_tight():
    r = T.verify_pyramid_lemma(G.cube(3), [(1, 0, 0), (0, 1, 0), (0, 0, 1)])
    assert r.passed and all(r.details["tight"].values())
    part = r.details["partition"]
    assert part.index_sets[0] == frozenset(range(6)) and not part.index_sets[3]
    assert part.partial_volumes[0] == 8


def test_pyramid_lemma_other_directions():
    r = T.verify_pyramid_lemma(G.hexagon_H())
    # k = 0 is the trivial equality; the first witness direction leaves slack
    assert r.passed and r.details["tight"] == {"k=0": True, "k=1": False}
    assert T.verify_pyramid_lemma(G.kleetope(2, 3), [(1, 0, 0), (0, 1, 0), (0, 0, 1)]).passed
    with pytest.raises(DependentDirections):
        T.verify_pyramid_lemma(G.cube(2), [(1, 1), (2, 2)])


def test_real_root_bound():
    assert T.verify_real_root_bound(G.cube(3)).passed
    assert T.verify_real_root_bound(G.hexagon_H()).passed
    with pytest.raises(DimensionTooLarge):
        T.verify_real_root_bound(G.cube(4))


def test_blichfeldt_van_der_corput():
    r = T.verify_interior_volume_bound(G.interior_box(2, 3))
    assert r.tight and r.details["interior"] == 3
    assert T.verify_interior_volume_bound(G.cube(2)).tight
    r = T.verify_interior_volume_bound(G.hexagon_H())
    assert (r.lhs, r.rhs, r.tight) == (3, 4, False)


def test_planar_examples():
    square = hull([(0, 0), (1, 0), (0, 1), (1, 1)])
    r = T.planar_root_geometry(square)
    assert r.passed and r.details["roots"].rational_roots == ((F(-1), 2),)
    big = hull([(0, 0), (2, 0), (0, 2), (2, 2)])
    r = T.planar_root_geometry(big)
    assert r.passed and r.details["on_half_line"] and r.details["boundary"] == 8
    r = T.planar_root_geometry(G.hexagon_H())
    assert r.passed and r.details["subchecks"]["circle"] and r.details["boundary"] == 6
    r = T.planar_root_geometry(G.scott_triangle())
    assert r.passed and r.details["subchecks"]["scott_triangle"]
    with pytest.raises(Not2D):
        T.planar_root_geometry(G.cube(3))


def test_planar_checks_catch_inconsistent_data():
    assert not T.planar_checks("bogus", F(2), F(3, 2), 0, 3).passed


def test_region_membership():
    assert T._in_region(-2.0, 0.0) and T._in_region(-0.5, 0.3)
    assert not T._in_region(-0.6, 0.1) and not T._in_region(-1.5, 0.0)


def test_cluster_witness():
    seq = T.cluster_witness_sequence(1, 3, [2, 4, 8, 16])
    d = [abs(T._larger_root(rs) + 1 / 3) for rs in seq]
    assert all(a > b for a, b in zip(d, d[1:]))
    # k = 2: G = 6 s^2 + 4 s + 1, roots -1/3 +- i sqrt(1/18)
    assert math.isclose(d[0], math.sqrt(1 / 18), rel_tol=1e-12)
    r = T.cluster_witness_report(1, 2, [2, 4, 8])
    assert r.passed
    with pytest.raises(ParameterConstraint):
        T.cluster_witness_sequence(1, 3, [3])


def test_reeve_drift():
    r = T.reeve_root_drift([2, 6, 100])
    assert r.passed
    # the roots besides -1 solve (q/6) s^2 + (1 - q/6) s + 1 = 0
    for q in (6, 100, 200):
        a, b, c = q / 6, 1 - q / 6, 1.0
        oracle = [complex(x) for x in [(-b + (b * b - 4 * a * c + 0j) ** 0.5) / (2 * a),
                                           (-b - (b * b - 4 * a * c + 0j) ** 0.5) / (2 * a)]]
        got = sorted(T.reeve_other_roots(q), key=lambda z: (z.real, z.imag))
        oracle.sort(key=lambda z: (z.real, z.imag))
        assert all(abs(x - y) < 1e-12 for x, y in zip(got, oracle))


def test_prism_and_products():
    for P in (G.hexagon_H(), G.reeve(3), G.simplex(2)):
        assert T.prism_root_check(P).passed


def test_crosspolytope_remark():
    assert T.crosspolytope_remark_check(3).lhs == 2
    for n in (3, 4, 5):
        assert T.crosspolytope_remark_check(n).passed


def test_kleetope_identity():
    for l in (1, 2, 3):
        r = T.kleetope_identity(l, 3)
        assert r.passed
        assert r.details["strict"] == (l > 1)


def test_sum_of_squares():
    r = T.sum_of_squares_conjecture(G.cube(3))
    assert r.tight and r.lhs == F(3, 4) and r.conjecture
    assert not T.sum_of_squares_conjecture(G.hexagon_H()).conjecture


def test_equality_case_matrix():
    for n in (2, 3):
        assert T.equality_case_report(n).passed
    with pytest.raises(ParameterConstraint):
        T.equality_case_matrix(4)


def test_frontier_scan():
    r = T.real_root_frontier_scan(G.symmetric_gallery())
    assert r.passed and r.conjecture and r.lhs > -1
    assert math.isclose(r.details["distance_to_-sqrt3/2"], abs(r.lhs + math.sqrt(3) / 2))


def test_suites_on_single_polytopes():
    assert len(T.run_suite("main", [G.hexagon_H()])) == 1
    with pytest.raises(Not2D):
        T.run_suite("planar", [G.cube(3)])
    with pytest.raises(EhrhartError):
        T.run_suite("prop15", [G.cube(4)])
    with pytest.raises(ParameterConstraint):
        T.run_suite("nope", [G.cube(2)])
    assert T.suite_passed(T.run_suite("all", [G.simplex(3)]))


def test_reports_are_sorted():
    reps = T.run_suite("minkowski", [G.hexagon_H(), G.cube(2)])
    keys = [(r.check_name, r.polytope_name) for r in reps]
    assert keys == sorted(keys)
