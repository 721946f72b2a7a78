"""Certified root isolation for integer polynomials.

Three tools, layered:

* exact integer roots with multiplicities (bounded divisor search plus
  synthetic division),
* real roots isolated with Sturm chains evaluated in exact integer arithmetic,
* all complex roots approximated by Aberth iteration and certified with
  Weierstrass-type inclusion disks.

:func:`isolate_roots` combines them into a :class:`RootSet` whose
multiplicities add up to the degree of the input.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Sequence

import mpmath
import numpy as np

from .poly import IntPolynomial

__all__ = [
    "CertificationError",
    "RootSet",
    "poly_gcd",
    "exact_quotient",
    "squarefree_decomposition",
    "squarefree_part",
    "distinct_root_count",
    "sturm_sequence",
    "sign_variations",
    "count_real_roots",
    "real_roots_in_interval",
    "refine_root",
    "root_bound",
    "integer_roots",
    "complex_roots",
    "isolate_roots",
    "conjugates_in_halfopen_interval",
]

DEFAULT_TOL = 1e-10
ENDPOINT_EPS = Fraction(1, 2**64)


class CertificationError(ArithmeticError):
    """Numerical refinement finished without certifying every root.

    ``partial`` holds the best available :class:`RootSet`; its uncertified
    entries are listed in ``partial.uncertified``.
    """

    def __init__(self, message: str, partial: RootSet | None = None):
        super().__init__(message)
        self.partial = partial


# ---------------------------------------------------------------------------
# exact algebra over Z[x]


def _prem(u: Sequence[int], v: Sequence[int]) -> tuple[list[int], int]:
    """Pseudo-remainder of ``u`` by ``v`` and the number of ``lc(v)`` scalings."""
    r = list(u)
    dv = len(v) - 1
    lc = v[-1]
    steps = 0
    while r and len(r) - 1 >= dv:
        t = r[-1]
        shift = len(r) - 1 - dv
        if lc != 1:
            r = [lc * x for x in r]
        for j in range(dv):
            r[shift + j] -= t * v[j]
        r.pop()
        steps += 1
        while r and r[-1] == 0:
            r.pop()
    return r, steps


def _primitive_list(r: list[int]) -> list[int]:
    g = 0
    for x in r:
        g = gcd(g, x)
        if g == 1:
            return r
    return [x // g for x in r] if g > 1 else r


def poly_gcd(f: IntPolynomial, g: IntPolynomial) -> IntPolynomial:
    """Primitive gcd with positive leading coefficient (primitive PRS)."""
    if f.is_zero():
        return g.primitive()
    if g.is_zero():
        return f.primitive()
    cont = gcd(f.content(), g.content())
    a = list(f.primitive().coeffs)
    b = list(g.primitive().coeffs)
    if len(a) < len(b):
        a, b = b, a
    while len(b) > 1:
        r, _ = _prem(a, b)
        if not r:
            break
        a, b = b, _primitive_list(r)
    if len(b) == 1:
        return IntPolynomial((cont,))
    return (IntPolynomial(b).primitive()) * cont


def exact_quotient(f: IntPolynomial, g: IntPolynomial) -> IntPolynomial:
    """``f / g`` when ``g`` divides ``f`` in Z[x]; raises ``ValueError`` otherwise."""
    if g.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    r = list(f.coeffs)
    d = g.coeffs
    dn = len(d) - 1
    lc = d[-1]
    if len(r) - 1 < dn:
        if not r:
            return IntPolynomial()
        raise ValueError("not an exact division")
    q = [0] * (len(r) - dn)
    for i in range(len(r) - 1, dn - 1, -1):
        t, rem = divmod(r[i], lc)
        if rem:
            raise ValueError("not an exact division")
        if t:
            q[i - dn] = t
            for j in range(dn + 1):
                r[i - dn + j] -= t * d[j]
    if any(r[:dn]):
        raise ValueError("not an exact division")
    return IntPolynomial(q)


def squarefree_decomposition(poly: IntPolynomial) -> list[tuple[IntPolynomial, int]]:
    """Yun's algorithm: pairwise coprime squarefree factors with multiplicities.

    The product of ``factor**mult`` equals the primitive part of ``poly`` (up
    to sign). Constant factors are omitted.
    """
    f = poly.primitive()
    if f.degree < 1:
        return []
    df = f.derivative()
    b = poly_gcd(f, df)
    c = exact_quotient(f, b)
    d = exact_quotient(df, b) - c.derivative()
    out = []
    i = 1
    while c.degree > 0:
        a = poly_gcd(c, d)
        if a.degree > 0:
            out.append((a, i))
        c = exact_quotient(c, a)
        d = exact_quotient(d, a) - c.derivative()
        i += 1
    return out


def squarefree_part(poly: IntPolynomial) -> IntPolynomial:
    f = poly.primitive()
    if f.degree < 1:
        return f
    return exact_quotient(f, poly_gcd(f, f.derivative())).primitive()


def distinct_root_count(poly: IntPolynomial) -> int:
    """Number of distinct complex roots, ``deg f - deg gcd(f, f')``."""
    f = poly.primitive()
    if f.degree < 1:
        return 0
    return f.degree - poly_gcd(f, f.derivative()).degree


# ---------------------------------------------------------------------------
# Sturm chains


def sturm_sequence(poly: IntPolynomial) -> list[IntPolynomial]:
    """Sturm chain ``p, p', -rem, ...`` with each member rescaled by a positive factor.

    Positive rescaling does not change sign variations, so the chain counts
    real roots exactly while coefficients stay integral and primitive.
    """
    p = poly.primitive()
    chain = [list(p.coeffs), _primitive_list(list(p.derivative().coeffs))]
    if not chain[1]:
        return [p]
    while len(chain[-1]) > 1:
        u, v = chain[-2], chain[-1]
        r, steps = _prem(u, v)
        if not r:
            break
        if v[-1] < 0 and steps % 2 == 1:
            r = _primitive_list(r)
        else:
            r = _primitive_list([-x for x in r])
        chain.append(r)
    return [IntPolynomial(c) for c in chain]


def _sign_at(coeffs: Sequence[int], u: int, vpow: Sequence[int]) -> int:
    """Sign of ``sum coeffs[i] * (u/v)**i`` given ``vpow[j] = v**j`` with v > 0."""
    d = len(coeffs) - 1
    if d < 0:
        return 0
    acc = coeffs[d]
    for i in range(d - 1, -1, -1):
        acc = acc * u + coeffs[i] * vpow[d - i]
    return (acc > 0) - (acc < 0)


def _sign_at_dyadic(coeffs: Sequence[int], u: int, e: int) -> int:
    """Sign of the polynomial at ``u / 2**e``."""
    d = len(coeffs) - 1
    if d < 0:
        return 0
    acc = coeffs[d]
    sh = 0
    for i in range(d - 1, -1, -1):
        sh += e
        acc = acc * u + (coeffs[i] << sh)
    return (acc > 0) - (acc < 0)


def _frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


def sign_at(poly: IntPolynomial, x) -> int:
    x = _frac(x)
    u, v = x.numerator, x.denominator
    if v & (v - 1) == 0:
        return _sign_at_dyadic(poly.coeffs, u, v.bit_length() - 1)
    vpow = [1]
    for _ in range(poly.degree):
        vpow.append(vpow[-1] * v)
    return _sign_at(poly.coeffs, u, vpow)


def sign_variations(chain: Sequence[IntPolynomial], x) -> int:
    """Sign changes of the chain at the rational ``x`` (zeros dropped)."""
    x = _frac(x)
    u, v = x.numerator, x.denominator
    if v & (v - 1) == 0:
        e = v.bit_length() - 1
        signs = (_sign_at_dyadic(q.coeffs, u, e) for q in chain)
    else:
        dmax = max(q.degree for q in chain)
        vpow = [1]
        for _ in range(max(dmax, 0)):
            vpow.append(vpow[-1] * v)
        signs = (_sign_at(q.coeffs, u, vpow) for q in chain)
    count = 0
    last = 0
    for s in signs:
        if s:
            if last and s != last:
                count += 1
            last = s
    return count


def _variations_at_infinity(chain: Sequence[IntPolynomial], positive: bool) -> int:
    count = 0
    last = 0
    for q in chain:
        if q.is_zero():
            continue
        s = 1 if q.leading > 0 else -1
        if not positive and q.degree % 2:
            s = -s
        if last and s != last:
            count += 1
        last = s
    return count


def root_bound(poly: IntPolynomial) -> int:
    """A power of two strictly larger than the modulus of every complex root."""
    c = poly.coeffs
    n = len(c) - 1
    if n < 1:
        return 1
    lc_bits = abs(c[-1]).bit_length() - 1
    best = 0.0
    for i in range(1, n + 1):
        a = c[n - i]
        if a:
            # Fujiwara: |z| <= 2 max |a_{n-i}/a_n|**(1/i)
            best = max(best, (abs(a).bit_length() - lc_bits) / i)
    return 2 ** (int(math.ceil(best)) + 2)


def count_real_roots(poly: IntPolynomial, lo=None, hi=None,
                     chain: Sequence[IntPolynomial] | None = None) -> int:
    """Number of distinct real roots in ``(lo, hi]``; ``None`` means infinite."""
    if chain is None:
        chain = sturm_sequence(squarefree_part(poly))
    vlo = _variations_at_infinity(chain, False) if lo is None else sign_variations(chain, lo)
    vhi = _variations_at_infinity(chain, True) if hi is None else sign_variations(chain, hi)
    return vlo - vhi


def refine_root(sqf: IntPolynomial, lo: Fraction, hi: Fraction, width: Fraction) -> tuple[Fraction, Fraction]:
    """Shrink ``(lo, hi]``, holding exactly one simple root of ``sqf``, below ``width``."""
    lo, hi = _frac(lo), _frac(hi)
    s_hi = sign_at(sqf, hi)
    if s_hi == 0:
        return hi, hi
    while hi - lo > width:
        mid = (lo + hi) / 2
        s = sign_at(sqf, mid)
        if s == 0:
            return mid, mid
        if s == s_hi:
            hi = mid
        else:
            lo = mid
    return lo, hi


def _isolate(chain, lo, hi, vlo, vhi, out):
    stack = [(lo, hi, vlo, vhi)]
    while stack:
        lo, hi, vlo, vhi = stack.pop()
        n = vlo - vhi
        if n <= 0:
            continue
        if n == 1:
            out.append((lo, hi))
            continue
        mid = (lo + hi) / 2
        vmid = sign_variations(chain, mid)
        stack.append((mid, hi, vmid, vhi))
        stack.append((lo, mid, vlo, vmid))


def real_roots_in_interval(poly: IntPolynomial, lo=None, hi=None, width=None,
                           chain: Sequence[IntPolynomial] | None = None):
    """Count and isolate the distinct real roots of ``poly`` in ``(lo, hi]``.

    Returns ``(count, intervals)`` where each interval ``(l, r)`` contains
    exactly one distinct root in ``(l, r]`` (``l == r`` means the root is
    exactly ``r``). Intervals are disjoint and sorted. ``lo``/``hi`` default to
    a root bound. When ``width`` is given, every interval is refined below it.
    """
    sqf = squarefree_part(poly)
    if sqf.degree < 1:
        return 0, []
    if chain is None:
        chain = sturm_sequence(sqf)
    bound = Fraction(root_bound(sqf))
    lo = -bound if lo is None else _frac(lo)
    hi = bound if hi is None else _frac(hi)
    if not lo < hi:
        raise ValueError("need lo < hi")
    vlo = sign_variations(chain, lo)
    vhi = sign_variations(chain, hi)
    intervals: list[tuple[Fraction, Fraction]] = []
    _isolate(chain, lo, hi, vlo, vhi, intervals)
    intervals.sort()
    if width is not None:
        width = _frac(width)
        intervals = [refine_root(sqf, l, r, width) for l, r in intervals]
    else:
        intervals = [(r, r) if sign_at(sqf, r) == 0 else (l, r) for l, r in intervals]
    return vlo - vhi, intervals


# ---------------------------------------------------------------------------
# integer roots


def _synthetic_div(coeffs: Sequence[int], r: int) -> tuple[list[int], int]:
    n = len(coeffs) - 1
    q = [0] * n
    acc = 0
    for i in range(n, 0, -1):
        acc = acc * r + coeffs[i]
        q[i - 1] = acc
    rem = acc * r + coeffs[0]
    return q, rem


def _integer_candidates(coeffs: Sequence[int]) -> list[int]:
    """Nonzero integers that may be roots: divisors of ``a0`` below the root bound."""
    a0 = abs(coeffs[0])
    limit = min(a0, root_bound(IntPolynomial(coeffs)))
    if limit <= 10**6:
        divisors = [d for d in range(1, limit + 1) if a0 % d == 0]
    else:
        import sympy

        divisors = [d for d in sympy.divisors(a0) if d <= limit]
    out = []
    for d in divisors:
        out.extend((d, -d))
    return out


def integer_roots(poly: IntPolynomial) -> list[tuple[int, int]]:
    """All integer roots with exact multiplicities, sorted ascending."""
    if poly.is_zero():
        raise ValueError("the zero polynomial has every integer as a root")
    coeffs = list(poly.coeffs)
    found: dict[int, int] = {}
    # root zero
    m0 = 0
    while coeffs and coeffs[0] == 0:
        coeffs.pop(0)
        m0 += 1
    if m0:
        found[0] = m0
    if len(coeffs) > 1:
        for r in _integer_candidates(coeffs):
            mult = 0
            while len(coeffs) > 1:
                q, rem = _synthetic_div(coeffs, r)
                if rem:
                    break
                coeffs = q
                mult += 1
            if mult:
                found[r] = mult
    return sorted(found.items())


def _deflate_integer_roots(poly: IntPolynomial, roots: Sequence[tuple[int, int]]) -> IntPolynomial:
    coeffs = list(poly.coeffs)
    for r, m in roots:
        for _ in range(m):
            coeffs, rem = _synthetic_div(coeffs, r)
            assert rem == 0
    return IntPolynomial(coeffs)


# ---------------------------------------------------------------------------
# root sets


@dataclass
class RootSet:
    """Root multiset of an integer polynomial, split by certification route.

    ``isolated_real_roots`` holds ``(lo, hi, mult)`` with rational endpoints;
    the root lies in ``(lo, hi]`` (a point interval when ``lo == hi``).
    ``complex_roots`` holds ``(approx, radius, mult)``; the disk of that
    radius about ``approx`` contains exactly one distinct root.
    """

    exact_integer_roots: list[tuple[int, int]] = field(default_factory=list)
    isolated_real_roots: list[tuple[Fraction, Fraction, int]] = field(default_factory=list)
    complex_roots: list[tuple[complex, float, int]] = field(default_factory=list)
    source_poly_degree: int = 0
    uncertified: list[int] = field(default_factory=list)

    @property
    def total_multiplicity(self) -> int:
        return (sum(m for _, m in self.exact_integer_roots)
                + sum(m for *_, m in self.isolated_real_roots)
                + sum(m for *_, m in self.complex_roots))

    @property
    def distinct_count(self) -> int:
        return len(self.exact_integer_roots) + len(self.isolated_real_roots) + len(self.complex_roots)

    @property
    def certified(self) -> bool:
        return not self.uncertified

    def real_values(self) -> list[float]:
        """Approximate real roots (integers and isolated roots), ascending."""
        vals = [float(r) for r, _ in self.exact_integer_roots]
        vals += [float((lo + hi) / 2) for lo, hi, _ in self.isolated_real_roots]
        return sorted(vals)

    def nonreal_values(self) -> list[complex]:
        return [z for z, _, _ in self.complex_roots]

    def values(self) -> list[complex]:
        """All distinct roots as complex approximations in the canonical order."""
        return [complex(x) for x in self.real_values()] + sorted(
            self.nonreal_values(), key=lambda z: (z.real, z.imag))

    def to_dict(self) -> dict:
        return {
            "source_poly_degree": self.source_poly_degree,
            "exact_integer_roots": [[str(r), m] for r, m in sorted(self.exact_integer_roots)],
            "isolated_real_roots": [
                [_frac_str(lo), _frac_str(hi), m] for lo, hi, m in sorted(self.isolated_real_roots)
            ],
            "complex_roots": [
                [repr(z.real), repr(z.imag), repr(float(r)), m]
                for z, r, m in sorted(self.complex_roots, key=lambda t: (t[0].real, t[0].imag))
            ],
            "certified": self.certified,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict) -> RootSet:
        return cls(
            exact_integer_roots=[(int(r), int(m)) for r, m in data["exact_integer_roots"]],
            isolated_real_roots=[(Fraction(lo), Fraction(hi), int(m))
                                 for lo, hi, m in data["isolated_real_roots"]],
            complex_roots=[(complex(float(re), float(im)), float(r), int(m))
                           for re, im, r, m in data["complex_roots"]],
            source_poly_degree=int(data["source_poly_degree"]),
        )


def _frac_str(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


# ---------------------------------------------------------------------------
# Aberth iteration


def _initial_guesses(coeffs: Sequence[int], n: int) -> np.ndarray:
    bound = float(root_bound(IntPolynomial(coeffs))) / 4.0
    k = np.arange(n)
    # offset angle keeps the start points off the real axis
    return bound * 0.8 * np.exp(1j * (2 * np.pi * k / n + 0.4))


def _aberth_float(coeffs: Sequence[int], max_iter: int) -> np.ndarray:
    n = len(coeffs) - 1
    scale = abs(coeffs[-1])
    c = np.array([float(Fraction(x, scale)) for x in coeffs], dtype=complex)
    dc = c[1:] * np.arange(1, n + 1)
    z = _initial_guesses(coeffs, n)
    for _ in range(max_iter):
        p = np.polyval(c[::-1], z)
        dp = np.polyval(dc[::-1], z)
        diff = z[:, None] - z[None, :]
        np.fill_diagonal(diff, 1.0)
        s = (1.0 / diff).sum(axis=1) - 1.0
        with np.errstate(all="ignore"):
            ratio = p / dp
            w = ratio / (1.0 - ratio * s)
        w = np.where(np.isfinite(w), w, 0.0)
        z = z - w
        if np.all(np.abs(w) <= 1e-15 * np.maximum(1.0, np.abs(z))):
            break
    return z


def _aberth_mp(coeffs, z, iters: int):
    n = len(z)
    c = [mpmath.mpf(x) for x in coeffs]
    for _ in range(iters):
        new = []
        biggest = mpmath.mpf(0)
        for i in range(n):
            p = mpmath.polyval(c[::-1], z[i], derivative=True)
            val, der = p
            if val == 0:
                new.append(z[i])
                continue
            s = mpmath.fsum(1 / (z[i] - z[j]) for j in range(n) if j != i)
            ratio = val / der
            w = ratio / (1 - ratio * s)
            new.append(z[i] - w)
            biggest = max(biggest, abs(w) / max(1, abs(z[i])))
        z = new
        if biggest < mpmath.mpf(2) ** (-mpmath.mp.prec + 8):
            break
    return z


def _inclusion_radii(coeffs, z) -> list:
    """Radii ``n |p(z_i)| / (|lc| prod |z_i - z_j|)`` of Weierstrass inclusion disks."""
    n = len(z)
    c = [mpmath.mpf(x) for x in coeffs][::-1]
    lc = abs(c[0])
    radii = []
    for i in range(n):
        val = abs(mpmath.polyval(c, z[i]))
        prod = mpmath.mpf(1)
        for j in range(n):
            if j != i:
                prod *= abs(z[i] - z[j])
        if prod == 0:
            radii.append(mpmath.inf)
            continue
        # factor 2 absorbs evaluation rounding
        radii.append(2 * n * val / (lc * prod) + abs(z[i]) * mpmath.mpf(2) ** (-mpmath.mp.prec + 4))
    return radii


def _disjoint(z, radii) -> bool:
    n = len(z)
    for i in range(n):
        for j in range(i + 1, n):
            if abs(z[i] - z[j]) <= radii[i] + radii[j]:
                return False
    return True


def _certified_simple_roots(coeffs: Sequence[int], tol: float, max_iter: int,
                            max_prec: int = 1024):
    """Aberth roots of a squarefree polynomial with inclusion radii.

    Returns ``(roots, radii, ok)``; ``ok`` is False when the disks could not be
    made disjoint and below ``tol`` (relative) within ``max_prec`` bits.
    """
    n = len(coeffs) - 1
    if n == 1:
        z = [mpmath.mpc(Fraction(-coeffs[0], coeffs[1]))]
        return [complex(z[0])], [0.0], True
    try:
        z0 = _aberth_float(coeffs, max_iter)
        finite = bool(np.all(np.isfinite(z0)))
    except (OverflowError, FloatingPointError):
        finite = False
    if not finite:
        z0 = _initial_guesses(coeffs, n)
    prec = 106
    ok = False
    with mpmath.workprec(prec):
        z = [mpmath.mpc(complex(x)) for x in z0]
    while prec <= max_prec:
        with mpmath.workprec(prec):
            z = [mpmath.mpc(x) for x in z]
            z = _aberth_mp(coeffs, z, max_iter if not finite else 60)
            radii = _inclusion_radii(coeffs, z)
            small = all(r <= tol * max(1, abs(x)) for r, x in zip(radii, z))
            if small and _disjoint(z, radii):
                ok = True
                break
        prec *= 2
    return [complex(x) for x in z], [float(r) for r in radii], ok


def complex_roots(poly: IntPolynomial, tol: float = DEFAULT_TOL, max_iter: int = 500) -> RootSet:
    """All roots as certified complex approximations.

    Integer roots are extracted exactly first; the remaining factor is split
    into squarefree parts and each part is solved by Aberth iteration. Raises
    :class:`CertificationError` (carrying the partial result) when a disk
    cannot be certified.
    """
    if poly.degree < 1:
        raise ValueError("need a polynomial of degree >= 1")
    ints = integer_roots(poly)
    rest = _deflate_integer_roots(poly, ints)
    out = RootSet(exact_integer_roots=list(ints), source_poly_degree=poly.degree)
    for factor, mult in squarefree_decomposition(rest):
        zs, radii, ok = _certified_simple_roots(factor.coeffs, tol, max_iter)
        for z, r in zip(zs, radii):
            out.complex_roots.append((z, r, mult))
            if not ok:
                out.uncertified.append(len(out.complex_roots) - 1)
    out.complex_roots.sort(key=lambda t: (t[0].real, t[0].imag))
    if out.uncertified:
        raise CertificationError("Aberth refinement did not certify all roots", out)
    return out


def isolate_roots(poly: IntPolynomial, tol: float = DEFAULT_TOL, width=None,
                  real_only: bool = False) -> RootSet:
    """Full root set: exact integers, Sturm-isolated reals, certified non-real roots.

    Real roots are refined below ``width`` (default ``tol`` as a dyadic).
    With ``real_only`` the non-real roots are not computed; the caller is then
    responsible for knowing that none exist (``source_poly_degree`` still
    records the degree).
    """
    if poly.degree < 1:
        raise ValueError("need a polynomial of degree >= 1")
    if width is None:
        width = Fraction(1, 2 ** max(1, int(-math.log2(tol)) + 1))
    ints = integer_roots(poly)
    rest = _deflate_integer_roots(poly, ints)
    out = RootSet(exact_integer_roots=list(ints), source_poly_degree=poly.degree)
    for factor, mult in squarefree_decomposition(rest):
        chain = sturm_sequence(factor)
        n_real, intervals = real_roots_in_interval(factor, width=width, chain=chain)
        for lo, hi in intervals:
            out.isolated_real_roots.append((lo, hi, mult))
        n_nonreal = factor.degree - n_real
        if n_nonreal == 0 or real_only:
            continue
        zs, radii, ok = _certified_simple_roots(factor.coeffs, tol, 500)
        ranked = sorted(zip(zs, radii), key=lambda t: -abs(t[0].imag))
        for z, r in ranked[:n_nonreal]:
            out.complex_roots.append((z, r, mult))
            if not ok or abs(z.imag) <= r:
                out.uncertified.append(len(out.complex_roots) - 1)
    out.isolated_real_roots.sort()
    order = sorted(range(len(out.complex_roots)), key=lambda i: (out.complex_roots[i][0].real,
                                                                  out.complex_roots[i][0].imag))
    remap = {old: new for new, old in enumerate(order)}
    out.complex_roots = [out.complex_roots[i] for i in order]
    out.uncertified = sorted(remap[i] for i in out.uncertified)
    if out.uncertified:
        raise CertificationError("non-real roots could not be certified", out)
    return out


# ---------------------------------------------------------------------------
# the (m - 2, m] test


def conjugates_in_halfopen_interval(poly: IntPolynomial, m: int) -> bool:
    """True iff every root of ``poly`` is real and lies in ``(m - 2, m]``.

    Decided exactly: the Sturm count of distinct roots in ``(m - 2, m]`` must
    equal the number of distinct complex roots. A positive answer is then
    confirmed by deflating ``poly`` to a constant using only the roots
    ``m - 1`` and ``m``.
    """
    if poly.degree < 1:
        return True
    sqf = squarefree_part(poly)
    inside = count_real_roots(sqf, m - 2, m)
    if inside != sqf.degree:
        return False
    rest = _deflate_integer_roots(
        poly, [(r, mlt) for r, mlt in integer_roots(poly) if r in (m - 1, m)])
    if rest.degree != 0:
        raise AssertionError(f"all roots in ({m - 2}, {m}] but not in {{{m - 1}, {m}}}")
    return True
