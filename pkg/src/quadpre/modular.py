"""Polynomial arithmetic modulo word-sized primes.

Used to bound (and, with CRT, to reconstruct) greatest common divisors of
high-degree iteration polynomials without building their exact integer
coefficients. All primes are below ``2**31`` so products of two residues
fit in ``int64``.
"""

from __future__ import annotations

from functools import lru_cache
from math import prod

import numpy as np

from .poly import IntPolynomial

PRIMES = (
    2147483647, 2147483629, 2147483587, 2147483579, 2147483563, 2147483549,
    2147483543, 2147483497, 2147483489, 2147483477, 2147483423, 2147483399,
)

_HALF = 1 << 16


def _trim(a: np.ndarray) -> np.ndarray:
    nz = np.flatnonzero(a)
    return a[: nz[-1] + 1] if nz.size else a[:0]


def reduce(poly: IntPolynomial, q: int) -> np.ndarray:
    return _trim(np.array([x % q for x in poly.coeffs], dtype=np.int64))


def mul(a: np.ndarray, b: np.ndarray, q: int) -> np.ndarray:
    """Product of residue vectors; 16-bit splitting keeps convolutions exact."""
    if a.size == 0 or b.size == 0:
        return a[:0]
    a_hi, a_lo = a >> 16, a & (_HALF - 1)
    b_hi, b_lo = b >> 16, b & (_HALF - 1)
    hh = np.convolve(a_hi, b_hi) % q
    ll = np.convolve(a_lo, b_lo) % q
    mid = (np.convolve(a_hi, b_lo) + np.convolve(a_lo, b_hi)) % q
    shift32 = (1 << 32) % q
    return _trim((hh * shift32 % q + mid * _HALF % q + ll) % q)


@lru_cache(maxsize=64)
def _iterates_mod(a: int, n: int, q: int) -> tuple[np.ndarray, ...]:
    seq = [_trim(np.array([a % q], dtype=np.int64))]
    for _ in range(n):
        f = mul(seq[-1], seq[-1], q)
        if f.size < 2:
            f = np.concatenate([f, np.zeros(2 - f.size, dtype=np.int64)])
        f = f.copy()
        f[1] = (f[1] + 1) % q
        seq.append(_trim(f))
    for s in seq:
        s.setflags(write=False)
    return tuple(seq)


def difference_poly_mod(a: int, k: int, p: int, q: int) -> np.ndarray:
    """``F_{k+p}(c, a) - F_k(c, a)`` reduced mod ``q``."""
    seq = _iterates_mod(int(a), k + p, q)
    hi, lo = seq[k + p], seq[k]
    out = hi.copy()
    out[: lo.size] = (out[: lo.size] - lo) % q
    return _trim(out)


def _monic(a: np.ndarray, q: int) -> np.ndarray:
    inv = pow(int(a[-1]), q - 2, q)
    return a * inv % q


def rem(a: np.ndarray, b: np.ndarray, q: int) -> np.ndarray:
    b = _monic(b, q)
    db = b.size - 1
    r = a.copy()
    for i in range(r.size - 1, db - 1, -1):
        t = int(r[i])
        if t:
            r[i - db: i + 1] = (r[i - db: i + 1] - t * b) % q
    return _trim(r[:db] if db > 0 else r[:0])


def gcd(a: np.ndarray, b: np.ndarray, q: int) -> np.ndarray:
    """Monic gcd mod ``q``."""
    a, b = _trim(a), _trim(b)
    if a.size < b.size:
        a, b = b, a
    while b.size:
        a, b = b, rem(a, b, q)
    return _monic(a, q) if a.size else a


def gcd_degree(f: IntPolynomial | tuple, g: IntPolynomial | tuple, q: int) -> int:
    fa = reduce(f, q) if isinstance(f, IntPolynomial) else difference_poly_mod(*f, q)
    ga = reduce(g, q) if isinstance(g, IntPolynomial) else difference_poly_mod(*g, q)
    return gcd(fa, ga, q).size - 1


def crt_gcd(f: IntPolynomial, g: IntPolynomial, primes=PRIMES) -> IntPolynomial | None:
    """Exact monic gcd of two monic integer polynomials by CRT over ``primes``.

    Returns ``None`` if the primes run out before the reconstruction divides
    both inputs.
    """
    from .roots import exact_quotient

    best_deg = None
    residues: list[tuple[int, np.ndarray]] = []
    last = None
    for q in primes:
        h = gcd(reduce(f, q), reduce(g, q), q)
        d = h.size - 1
        if best_deg is None or d < best_deg:
            best_deg, residues = d, []
        if d > best_deg:
            continue
        residues.append((q, h))
        cand = _crt_lift(residues)
        if cand == last:
            try:
                exact_quotient(f, cand)
                exact_quotient(g, cand)
                return cand
            except ValueError:
                pass
        last = cand
    return None


def _crt_lift(residues: list[tuple[int, np.ndarray]]) -> IntPolynomial:
    modulus = prod(q for q, _ in residues)
    n = residues[0][1].size
    coeffs = []
    for i in range(n):
        x, m = 0, 1
        for q, h in residues:
            r = int(h[i])
            # x = r mod q, x = old mod m
            t = (r - x) * pow(m, -1, q) % q
            x += m * t
            m *= q
        if x > modulus // 2:
            x -= modulus
        coeffs.append(x)
    return IntPolynomial(coeffs)
