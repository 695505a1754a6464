import math
from fractions import Fraction

import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st

from ehrhart_minima import polyroots as pr

F = Fraction


def from_roots(rs):
    p = [F(1)]
    for r in rs:
        p = pr.poly_mul(p, [-F(r), F(1)])
    return p


def test_divmod_and_gcd():
    a = from_roots([1, 2, 3])
    b = from_roots([2, 5])
    q, r = pr.poly_divmod(a, from_roots([2]))
    assert r == [0] and q == from_roots([1, 3])
    assert pr.poly_gcd(a, b) == from_roots([2])


def test_squarefree_split():
    p = from_roots([F(-1, 2)] * 3 + [2])
    factors = dict((tuple(f), m) for f, m in pr.squarefree_factors(p))
    assert factors == {tuple(from_roots([2])): 1, tuple(from_roots([F(-1, 2)])): 3}


def test_rational_roots_with_zero_and_fractions():
    p = from_roots([0, F(-2, 3), F(5, 7), 4])
    assert pr.rational_roots(p) == [F(-2, 3), 0, F(5, 7), 4]
    assert pr.rational_roots([F(1), F(0), F(1)]) == []


def test_sturm_counts():
    p = from_roots([-3, -1, 2])
    assert pr.count_real_roots(p) == 3
    assert pr.count_real_roots(p, -math.inf, F(-1)) == 2
    assert pr.count_real_roots(p, F(-1), F(2)) == 1
    assert pr.count_real_roots([F(1), F(0), F(1)]) == 0


def test_isolate_and_refine_sqrt2():
    p = [F(-2), F(0), F(1)]
    ivs = pr.isolate_real_roots(p)
    assert len(ivs) == 2
    r = pr.refine_root(p, *ivs[1], width=1e-14)
    assert abs(float(r) - math.sqrt(2)) < 1e-13


def test_aberth_matches_numpy():
    c = [1.0, 3.0, -2.0, 0.5, 1.0]
    z = np.sort_complex(pr.aberth(c))
    ref = np.sort_complex(np.roots(c[::-1]))
    assert np.allclose(z, ref, atol=1e-10)


@settings(max_examples=50, deadline=None)
@given(st.lists(st.fractions(min_value=-5, max_value=5, max_denominator=6), min_size=1, max_size=5))
def test_rational_roots_recovered(rs):
    p = from_roots(rs)
    assert pr.rational_roots(p) == sorted(set(rs))
    assert pr.count_real_roots(p) == len(set(rs))


@settings(max_examples=50, deadline=None)
@given(st.lists(st.integers(-9, 9), min_size=2, max_size=6).filter(lambda c: c[-1] != 0))
def test_isolation_counts_agree_with_sturm(coeffs):
    p = pr.trim([F(c) for c in coeffs])
    if pr.degree(p) < 1:
        return
    radical = [F(1)]
    for f, _ in pr.squarefree_factors(p):
        radical = pr.poly_mul(radical, f)
    assert len(pr.isolate_real_roots(radical)) == pr.count_real_roots(p)
