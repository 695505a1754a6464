"""Univariate polynomial toolkit over the rationals.

Polynomials are lists of :class:`~fractions.Fraction` coefficients in
ascending degree.  Provides exact gcd / square-free splitting, rational
root search, Sturm sequences, bisection refinement, and an Aberth
simultaneous iteration for the remaining complex roots.
"""
from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence

import numpy as np

from .errors import NonConvergence

Poly = list[Fraction]


def trim(p: Sequence) -> Poly:
    q = [Fraction(c) for c in p]
    while len(q) > 1 and q[-1] == 0:
        q.pop()
    return q or [Fraction(0)]


def degree(p: Sequence) -> int:
    q = trim(p)
    return -1 if q == [0] else len(q) - 1


def horner(p: Sequence, x):
    acc = 0 * x
    for c in reversed(p):
        acc = acc * x + c
    return acc


def derivative(p: Sequence) -> Poly:
    return trim([i * c for i, c in enumerate(p)][1:] or [0])


def monic(p: Sequence) -> Poly:
    q = trim(p)
    return [c / q[-1] for c in q]


def poly_sub(a: Sequence, b: Sequence) -> Poly:
    n = max(len(a), len(b))
    a = list(a) + [Fraction(0)] * (n - len(a))
    b = list(b) + [Fraction(0)] * (n - len(b))
    return trim([x - y for x, y in zip(a, b)])


def poly_mul(a: Sequence, b: Sequence) -> Poly:
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return trim(out)


def poly_divmod(a: Sequence, b: Sequence) -> tuple[Poly, Poly]:
    a, b = trim(a), trim(b)
    db = degree(b)
    if db < 0:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(a)
    if degree(a) < db:
        return [Fraction(0)], rem
    quot = [Fraction(0)] * (len(a) - db)
    for k in range(len(a) - 1 - db, -1, -1):
        coef = rem[k + db] / b[-1]
        quot[k] = coef
        for i, c in enumerate(b):
            rem[k + i] -= coef * c
    return trim(quot), trim(rem[:db] or [0])


def poly_gcd(a: Sequence, b: Sequence) -> Poly:
    a, b = trim(a), trim(b)
    while degree(b) >= 0:
        a, b = b, poly_divmod(a, b)[1]
    return monic(a) if degree(a) >= 0 else a


def squarefree_factors(p: Sequence) -> list[tuple[Poly, int]]:
    """Yun's algorithm: monic square-free ``f_i`` with ``p = lc * prod f_i**i``."""
    f = trim(p)
    if degree(f) < 1:
        return []
    df = derivative(f)
    a = poly_gcd(f, df)
    b = poly_divmod(f, a)[0]
    c = poly_divmod(df, a)[0]
    d = poly_sub(c, derivative(b))
    out = []
    i = 1
    while degree(b) > 0:
        a = poly_gcd(b, d)
        b = poly_divmod(b, a)[0]
        c = poly_divmod(d, a)[0]
        d = poly_sub(c, derivative(b))
        if degree(a) > 0:
            out.append((monic(a), i))
        i += 1
    return out


# ---------------------------------------------------------------------------
# rational roots


def _divisors(n: int) -> list[int]:
    n = abs(n)
    small, large = [], []
    for d in range(1, math.isqrt(n) + 1):
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
    return small + large[::-1]


def integer_primitive(p: Sequence) -> list[int]:
    q = trim(p)
    lcm = math.lcm(*(c.denominator for c in q))
    ints = [int(c * lcm) for c in q]
    g = math.gcd(*ints)
    return [x // g for x in ints]


def rational_roots(p: Sequence) -> list[Fraction]:
    """Distinct rational roots, found among the ``±u/v`` divisor candidates."""
    q = trim(p)
    roots = []
    if degree(q) < 1:
        return roots
    while q[0] == 0:
        roots.append(Fraction(0))
        q = q[1:]
    ints = integer_primitive(q)
    if len(ints) <= 1:
        return roots
    d = len(ints) - 1
    for den in _divisors(ints[-1]):
        for num in _divisors(ints[0]):
            if math.gcd(num, den) != 1:
                continue
            for sgn in (1, -1):
                u = sgn * num
                # den**d * p(u/den) as an integer
                if sum(c * u**i * den ** (d - i) for i, c in enumerate(ints)) == 0:
                    roots.append(Fraction(u, den))
    return sorted(set(roots))


def deflate(p: Sequence, r: Fraction) -> Poly:
    quot, rem = poly_divmod(p, [-r, Fraction(1)])
    if rem != [0]:
        raise ValueError(f"{r} is not a root")
    return quot


# ---------------------------------------------------------------------------
# Sturm sequences


def sturm_chain(p: Sequence) -> list[Poly]:
    chain = [trim(p), derivative(p)]
    while degree(chain[-1]) > 0:
        rem = poly_divmod(chain[-2], chain[-1])[1]
        if degree(rem) < 0:
            break
        chain.append([-c for c in rem])
    return chain


def _sign_at_infinity(p: Poly, positive: bool) -> int:
    d = degree(p)
    if d < 0:
        return 0
    s = 1 if p[-1] > 0 else -1
    return s if positive or d % 2 == 0 else -s


def sign_variations(chain: Sequence[Poly], x) -> int:
    if x == math.inf or x == -math.inf:
        signs = [_sign_at_infinity(p, x > 0) for p in chain]
    else:
        signs = [(v > 0) - (v < 0) for v in (horner(p, x) for p in chain)]
    signs = [s for s in signs if s != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_real_roots(p: Sequence, lo=-math.inf, hi=math.inf) -> int:
    """Number of distinct real roots in the half-open interval ``(lo, hi]``."""
    factors = squarefree_factors(p)
    if not factors:
        return 0
    radical = [Fraction(1)]
    for f, _ in factors:
        radical = poly_mul(radical, f)
    chain = sturm_chain(radical)
    return sign_variations(chain, lo) - sign_variations(chain, hi)


def cauchy_bound(p: Sequence) -> Fraction:
    q = trim(p)
    return 1 + max(abs(c / q[-1]) for c in q[:-1])


def isolate_real_roots(p: Sequence) -> list[tuple[Fraction, Fraction]]:
    """Disjoint intervals ``(a, b]`` each holding exactly one real root of square-free ``p``."""
    q = trim(p)
    if degree(q) < 1:
        return []
    chain = sturm_chain(q)
    bound = cauchy_bound(q)
    out = []
    stack = [(-bound, bound)]
    while stack:
        a, b = stack.pop()
        k = sign_variations(chain, a) - sign_variations(chain, b)
        if k == 0:
            continue
        if k == 1:
            out.append((a, b))
            continue
        mid = (a + b) / 2
        stack.append((mid, b))
        stack.append((a, mid))
    return sorted(out)


def refine_root(p: Sequence, a: Fraction, b: Fraction, width: float, max_steps: int = 400) -> Fraction:
    """Bisect the isolating interval ``(a, b]`` down to ``width``."""
    fb = horner(p, b)
    if fb == 0:
        return b
    steps = 0
    while b - a > width:
        mid = (a + b) / 2
        fm = horner(p, mid)
        if fm == 0:
            return mid
        if (fm > 0) == (fb > 0):
            b, fb = mid, fm
        else:
            a = mid
        steps += 1
        if steps > max_steps:
            raise NonConvergence("bisection step budget exhausted")
    return (a + b) / 2


# ---------------------------------------------------------------------------
# complex roots


def aberth(coeffs: Sequence[float], tol: float = 1e-15, max_iter: int = 500) -> np.ndarray:
    """All roots of a float polynomial (ascending coefficients), simultaneously."""
    c = np.asarray(coeffs, dtype=complex)
    d = len(c) - 1
    desc = c[::-1] / c[-1]
    ddesc = np.polyder(desc)
    centre = -desc[1] / d
    radius = 1 + np.max(np.abs(desc[1:]))
    z = centre + radius * np.exp(1j * (2 * np.pi * np.arange(d) / d + 0.4))
    for _ in range(max_iter):
        pv = np.polyval(desc, z)
        dv = np.polyval(ddesc, z)
        ratio = pv / np.where(dv == 0, 1e-300, dv)
        diff = z[:, None] - z[None, :]
        np.fill_diagonal(diff, 1.0)
        inv = 1.0 / diff
        np.fill_diagonal(inv, 0.0)
        s = inv.sum(axis=1)
        w = ratio / (1 - ratio * s)
        z = z - w
        if np.max(np.abs(w)) <= tol * (1 + np.max(np.abs(z))):
            return z
    raise NonConvergence("Aberth iteration did not converge")


def newton_polish(coeffs: Sequence[float], z: complex, steps: int = 3) -> complex:
    c = np.asarray(coeffs, dtype=complex)[::-1]
    dc = np.polyder(c)
    for _ in range(steps):
        dv = np.polyval(dc, z)
        if dv == 0:
            break
        z = z - np.polyval(c, z) / dv
    return complex(z)
