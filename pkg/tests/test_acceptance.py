"""Acceptance suite; each test carries a ``criterion`` marker and the summary
prints one PASS/FAIL line per criterion."""

import itertools
import math
import random
from collections import defaultdict
from fractions import Fraction

import pytest
import sympy

from quadpre.coding import (RealMapParams, c_minus, c_plus, closed_forms, conjugacy_residual,
                            gamma, orbit, psi)
from quadpre.paramsets import (R_bound, intersect, is_preperiodic_exact, nonstabilization_check,
                               param_set, point_set, point_set_is_symmetric)
from quadpre.poly import IntPolynomial, difference_poly, eval_poly, iterate_poly, telescoping_identity_check
from quadpre.roots import conjugates_in_halfopen_interval, real_roots_in_interval
from quadpre.symdyn import (SignSequence, angle_minus2, collides_at_minus2, count_X_minus2,
                            enumerate_sequences, psi_minus2)

criterion = pytest.mark.criterion
C = sympy.Symbol("c")


def shapes(max_len):
    return [(k, n - k) for n in range(1, max_len + 1) for k in range(n)]


def canonical_upto(max_len):
    seen = set()
    for k, p in shapes(max_len):
        seen.update(s.canonical() for s in enumerate_sequences(k, p))
    return sorted(seen, key=str)


# ---------------------------------------------------------------------------


@criterion(1, "classification of common integer parameters at depth 6")
def test_classification():
    assert intersect(0, 1, 6, 6).values() == {-2, -1, 0}
    assert intersect(0, 2, 6, 6).values() == {-2}
    for a in (1, 2, 3, 4):
        rep = intersect(a, a + 1, 6, 6)
        assert rep.values() == {-a * a - a - 1, -a * a - a}
        assert rep.algebraic_common == []
    for a, b in [(0, 3), (0, 4), (1, 3), (2, 4), (1, 4)]:
        rep = intersect(a, b, 6, 6)
        assert rep.values() == set() and rep.algebraic_common == []
        assert rep.complete is True


@criterion(2, "small parameter sets equal their closed forms")
def test_small_parameter_sets():
    for a in range(6):
        forms = {
            (0, 1): {-a * a + a},
            (1, 1): {-a * a - a, -a * a + a},
            (0, 2): {-a * a - a - 1, -a * a + a},
            (1, 2): {-a * a - a - 1, -a * a - a, -a * a + a - 1, -a * a + a},
        }
        for (k, p), want in forms.items():
            rep = param_set(a, k, p)
            assert all(e["kind"].startswith("exact-integer") for e in rep.elements)
            assert rep.integer_values() == want


@criterion(3, "coding parameters match isolated real roots for a = 2, 3 and k + p <= 8")
def test_coding_parameters_equal_roots():
    # Sturm isolation gives the count and disjoint isolating intervals; an
    # exact sign change of D across [g - 1e-9, g + 1e-9] puts a root within
    # 1e-9 of each g, and g-spacing above 2e-9 makes the matching one-to-one
    eps = Fraction(1, 10**9)
    for a in (2, 3):
        # integer endpoints keep the Sturm bisection on small dyadics
        lo, hi = math.floor(c_minus(a)), a - a * a
        for k, p in shapes(8):
            D = difference_poly(a, k, p)
            count, ivs = real_roots_in_interval(D, lo, hi)
            gs = sorted(gamma(a, s) for s in enumerate_sequences(k, p, first_sign=1))
            assert count == len(gs) == 2 ** (k + p - 1) == D.degree
            assert all(y - x > 2e-9 for x, y in zip(gs, gs[1:]))
            for g, (l, r) in zip(gs, ivs):
                x = Fraction(g)
                assert eval_poly(D, x - eps) * eval_poly(D, x + eps) <= 0
                assert l - eps <= x <= r + eps


@criterion(4, "number of coded points at c = -2")
def test_counting_at_minus2():
    for k, p in shapes(12):
        ts = {angle_minus2(s) for s in enumerate_sequences(k, p)}
        want = 2 ** p if k == 0 else 2 ** (k + p) - 2 ** (k - 1) + 1
        assert len(ts) == want == count_X_minus2(k, p)
    for k, p in shapes(6):
        n = len({angle_minus2(s) for s in enumerate_sequences(k, p)})
        assert point_set(-2, k, p).distinct_count == n


def _collision_partner(s):
    # the only shape a collision can take: same preperiod k, flip at k - 2
    if s.cycle != (1,) or s.k < 2 or s.prefix[-1] != -1:
        return None
    pre = list(s.prefix)
    pre[-2] = -pre[-2]
    return SignSequence(tuple(pre), (1,))


@criterion(5, "conjugacy, sign conditions, injectivity and collisions for k + p <= 10")
def test_conjugacy_suite():
    seqs = canonical_upto(10)
    for c in (-2.0, -2.1, -2.5, -3.0, -4.0):
        beta = RealMapParams.of(c).beta
        for s in seqs:
            assert conjugacy_residual(c, s) <= 1e-9 * max(1.0, beta)
            # signs along the true orbit, iterated at 160 bits from a 160-bit start
            z = psi(c, s, prec=160)
            for n, w in enumerate(orbit(c, z, s.k + 2 * s.p + 1)):
                assert s[n] * w >= -1e-9
        if c < -2:
            for k, p in shapes(10):
                vals = sorted(psi(c, s) for s in enumerate_sequences(k, p))
                assert min(b - a for a, b in zip(vals, vals[1:])) > 1e-8
    # exact collision classes at -2
    for k, p in shapes(10):
        classes = defaultdict(set)
        for s in enumerate_sequences(k, p):
            classes[angle_minus2(s)].add(s.canonical())
        for members in classes.values():
            assert len(members) <= 2
            for u, v in itertools.combinations(members, 2):
                assert collides_at_minus2(u, v)
            for u in members:
                w = _collision_partner(u)
                if w is not None and angle_minus2(w) in classes:
                    assert collides_at_minus2(u, w)
                    assert w in members
    for k, p in shapes(6):
        cs = [s.canonical() for s in enumerate_sequences(k, p)]
        for u, v in itertools.combinations(cs, 2):
            assert (angle_minus2(u) == angle_minus2(v)) == collides_at_minus2(u, v)


@criterion(6, "cosine formula and short closed forms agree with the bisection solver")
def test_closed_form_cross_checks():
    for s in canonical_upto(10):
        solved = psi(-2, s, closed_form=False)
        assert abs(float(solved) - psi_minus2(s)[1]) <= 1e-9
    rng = random.Random(20260314)
    samples = [-2.0] + [rng.uniform(-12.0, -2.0) for _ in range(49)]
    for eps in (1, -1):
        for text, fn in closed_forms(eps).items():
            for c in samples:
                assert abs(psi(c, text) - fn(c)) <= 1e-9


@criterion(7, "localization of parameter sets and of preperiodic orbits")
def test_localization():
    for a in range(-3, 6):
        for k, p in shapes(5):
            rep = param_set(a, k, p)
            assert all(abs(complex(e["value"])) <= rep.R_a + 1e-9 for e in rep.elements)
    for a in (2, 3, 4, 5, 6):
        assert abs(R_bound(a) + c_minus(a)) <= 1e-12
        assert abs(R_bound(-a) + c_minus(-a)) <= 1e-12
    for c in range(-12, 3):
        rho = RealMapParams.of(c).rho if c <= 0 else (1 + math.sqrt(1 + 4 * c)) / 2
        for a in range(-5, 6):
            if is_preperiodic_exact(c, a):
                z, seen = a, set()
                while z not in seen:
                    seen.add(z)
                    assert abs(z) <= rho + 1e-12
                    z = z * z + c
        for k, p in [(0, 2), (1, 2), (2, 1)]:
            for z in point_set(c, k, p).values():
                assert abs(z) <= rho + 1e-9


def _brute_force_polys():
    rng = random.Random(7)
    irreducible = [[-2, 0, 1], [1, 1, 1], [-1, -1, 1], [1, 0, 1], [-3, 0, 1], [-1, 1, 1]]
    out = []
    while len(out) < 50:
        m = rng.randint(-6, 6)
        deg = rng.randint(1, 5)
        kind = len(out) % 3
        factors = []
        for _ in range(deg):
            if kind == 0:
                factors.append([-(m - rng.randint(0, 1)), 1])
            elif kind == 1:
                factors.append([-(m + rng.choice([-2, -1, 0, 1, 2])), 1])
            else:
                q = rng.choice(irreducible)
                s = m - rng.randint(0, 2)
                # q(x - s), a shifted quadratic
                x = sympy.Symbol("x")
                shifted = sympy.Poly(sum(cf * (x - s) ** i for i, cf in enumerate(q)), x)
                factors.append([int(t) for t in reversed(shifted.all_coeffs())])
        poly = IntPolynomial([1])
        for f in factors:
            poly = poly * IntPolynomial(f)
        out.append((poly, m))
    return out


@criterion(8, "half-open interval test against brute-force roots")
def test_halfopen_interval_oracle():
    positives = 0
    for poly, m in _brute_force_polys():
        expr = sum(int(cf) * C ** i for i, cf in enumerate(poly.coeffs))
        exact = sympy.roots(sympy.Poly(expr, C))
        assert sum(exact.values()) == poly.degree
        want = all(r in (m - 1, m) for r in exact)
        positives += want
        assert conjugates_in_halfopen_interval(poly, m) == want
    assert 10 <= positives <= 40


@criterion(9, "structural invariants")
def test_structural_invariants():
    for a in range(-4, 5):
        for n in range(1, 9):
            f = iterate_poly(a, n)
            assert f.degree == 2 ** (n - 1) and f.leading == 1
        for n in range(6):
            assert telescoping_identity_check(a, n)
    for a in range(1, 5):
        for k, p in shapes(6):
            if k >= 1:
                assert difference_poly(a, k, p) == difference_poly(-a, k, p)
    for c in (-3, -2, Fraction(-3, 4), 0, 1):
        for k, p in shapes(5):
            if k >= 1:
                assert point_set_is_symmetric(c, k, p)
    for a in (0, 1, 2, 3):
        assert nonstabilization_check(a, 5)
