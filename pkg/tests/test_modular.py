import numpy as np
from hypothesis import given, settings, strategies as st

from quadpre import modular
from quadpre.poly import IntPolynomial, difference_poly
from quadpre.roots import poly_gcd

Q = modular.PRIMES[0]


def test_primes_are_prime_and_fit():
    import sympy
    for q in modular.PRIMES:
        assert sympy.isprime(q) and q < 2**31


def test_reduction_matches_exact_polynomial():
    for a, k, p in [(0, 3, 2), (3, 4, 3), (-5, 2, 4), (7, 0, 6)]:
        exact = difference_poly(a, k, p)
        for q in modular.PRIMES[:3]:
            assert np.array_equal(modular.reduce(exact, q), modular.difference_poly_mod(a, k, p, q))


small = st.lists(st.integers(-9, 9), max_size=8)


@settings(max_examples=40, deadline=None)
@given(small, small, small)
def test_gcd_degree_matches_exact(u, v, w):
    # a shared factor w makes the gcd nontrivial
    f = IntPolynomial.from_roots(u + w)
    g = IntPolynomial.from_roots(v + w)
    assert modular.gcd(modular.reduce(f, Q), modular.reduce(g, Q), Q).size - 1 == poly_gcd(f, g).degree
    assert modular.crt_gcd(f, g) == poly_gcd(f, g)


def test_mul_large_residues():
    a = np.array([Q - 1] * 300, dtype=np.int64)
    got = modular.mul(a, a, Q)
    # (q-1)^2 = 1 mod q, so coefficient i is (i+1) for the rising part
    assert int(got[0]) == 1 and int(got[299]) == 300 % Q


def test_gcd_degree_of_iteration_polynomials():
    # S_{0,2,1} = {0, -2} and S_{1,1,1} = {0, -2}: both shared
    assert modular.gcd_degree((0, 2, 1), (1, 1, 1), Q) == poly_gcd(difference_poly(0, 2, 1),
                                                                   difference_poly(1, 1, 1)).degree
