"""Dense univariate polynomials over the integers.

The iteration polynomials ``F_n(c, z)`` of ``f_c(z) = z**2 + c`` are built
here in the two specialisations the rest of the package needs: ``z = a``
fixed (a polynomial in the parameter ``c``) and ``c`` fixed (a polynomial in
the dynamical variable ``z``).

Coefficients are Python integers, stored in ascending degree order.
"""

from __future__ import annotations

import json
from fractions import Fraction
from functools import lru_cache
from math import lcm
from numbers import Rational
from typing import Iterable, Sequence

__all__ = [
    "DEFAULT_DEGREE_CAP",
    "DegreeCapExceeded",
    "ResourceLimit",
    "IntPolynomial",
    "iterate_poly",
    "iterate_poly_z",
    "difference_poly",
    "point_difference_poly",
    "eval_poly",
    "telescoping_identity_check",
]

DEFAULT_DEGREE_CAP = 4096

KARATSUBA_CUTOFF = 64


class ResourceLimit(RuntimeError):
    """A configured size cap would be exceeded (not a mathematical failure)."""


class DegreeCapExceeded(ResourceLimit):
    """A requested polynomial would exceed the configured degree cap."""


def _trim(coeffs: list) -> list:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def _add(a: Sequence, b: Sequence) -> list:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, x in enumerate(b):
        out[i] += x
    return out


def _sub(a: Sequence, b: Sequence) -> list:
    n = max(len(a), len(b))
    out = list(a) + [0] * (n - len(a))
    for i, x in enumerate(b):
        out[i] -= x
    return out


def _schoolbook(a: Sequence, b: Sequence) -> list:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _karatsuba(a: Sequence, b: Sequence) -> list:
    na, nb = len(a), len(b)
    if min(na, nb) <= KARATSUBA_CUTOFF:
        return _schoolbook(a, b)
    m = max(na, nb) // 2
    a0, a1 = a[:m], a[m:]
    b0, b1 = b[:m], b[m:]
    z0 = _karatsuba(a0, b0)
    z2 = _karatsuba(a1, b1)
    z1 = _sub(_sub(_karatsuba(_add(a0, a1), _add(b0, b1)), z0), z2)
    out = [0] * (na + nb - 1)
    for i, x in enumerate(z0):
        out[i] += x
    for i, x in enumerate(z1):
        out[i + m] += x
    for i, x in enumerate(z2):
        out[i + 2 * m] += x
    return out


def _square(a: Sequence) -> list:
    n = len(a)
    if n <= KARATSUBA_CUTOFF:
        if not a:
            return []
        out = [0] * (2 * n - 1)
        for i, x in enumerate(a):
            if not x:
                continue
            out[2 * i] += x * x
            x2 = 2 * x
            for j in range(i + 1, n):
                out[i + j] += x2 * a[j]
        return out
    m = n // 2
    a0, a1 = a[:m], a[m:]
    z0 = _square(a0)
    z2 = _square(a1)
    z1 = _sub(_sub(_square(_add(a0, a1)), z0), z2)
    out = [0] * (2 * n - 1)
    for i, x in enumerate(z0):
        out[i] += x
    for i, x in enumerate(z1):
        out[i + m] += x
    for i, x in enumerate(z2):
        out[i + 2 * m] += x
    return out


class IntPolynomial:
    """Immutable dense polynomial with integer coefficients.

    ``coeffs[i]`` is the coefficient of ``x**i``. Trailing zeros are removed on
    construction, so the zero polynomial has ``coeffs == ()`` and degree -1.
    """

    __slots__ = ("_c", "_hash")

    def __init__(self, coeffs: Iterable[int] = ()):
        c = []
        for x in coeffs:
            if isinstance(x, bool) or not isinstance(x, int):
                if isinstance(x, Rational) and x.denominator == 1:
                    x = int(x.numerator)
                elif hasattr(x, "__index__"):
                    x = x.__index__()
                else:
                    raise TypeError(f"integer coefficient expected, got {x!r}")
            c.append(int(x))
        self._c = tuple(_trim(c))
        self._hash = None

    # construction helpers
    @classmethod
    def x(cls) -> IntPolynomial:
        return cls((0, 1))

    @classmethod
    def constant(cls, value: int) -> IntPolynomial:
        return cls((value,))

    @classmethod
    def from_roots(cls, roots: Iterable[int]) -> IntPolynomial:
        out = cls((1,))
        for r in roots:
            out = out * cls((-r, 1))
        return out

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self._c

    @property
    def degree(self) -> int:
        return len(self._c) - 1

    @property
    def leading(self) -> int:
        return self._c[-1] if self._c else 0

    def is_zero(self) -> bool:
        return not self._c

    def is_monic(self) -> bool:
        return self.leading == 1

    def __len__(self) -> int:
        return len(self._c)

    def __getitem__(self, i: int) -> int:
        if 0 <= i < len(self._c):
            return self._c[i]
        return 0

    def __eq__(self, other) -> bool:
        if isinstance(other, IntPolynomial):
            return self._c == other._c
        if isinstance(other, int):
            return self._c == IntPolynomial((other,))._c
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self._c)
        return self._hash

    def __repr__(self) -> str:
        return f"IntPolynomial({list(self._c)!r})"

    def __str__(self) -> str:
        if not self._c:
            return "0"
        terms = []
        for i in range(len(self._c) - 1, -1, -1):
            a = self._c[i]
            if a == 0:
                continue
            sign = "-" if a < 0 else "+"
            mag = abs(a)
            if i == 0:
                body = str(mag)
            else:
                var = "c" if i == 1 else f"c^{i}"
                body = var if mag == 1 else f"{mag}*{var}"
            terms.append((sign, body))
        first_sign, first_body = terms[0]
        s = ("-" if first_sign == "-" else "") + first_body
        for sign, body in terms[1:]:
            s += f" {sign} {body}"
        return s

    # arithmetic
    def _coerce(self, other) -> IntPolynomial:
        if isinstance(other, IntPolynomial):
            return other
        if isinstance(other, int):
            return IntPolynomial((other,))
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return IntPolynomial(_add(self._c, other._c))

    __radd__ = __add__

    def __neg__(self) -> IntPolynomial:
        return IntPolynomial(-x for x in self._c)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return IntPolynomial(_sub(self._c, other._c))

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPolynomial(x * other for x in self._c)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if other is self:
            return self.square()
        return IntPolynomial(_karatsuba(self._c, other._c))

    __rmul__ = __mul__

    def square(self) -> IntPolynomial:
        return IntPolynomial(_square(self._c))

    def __pow__(self, n: int) -> IntPolynomial:
        if n < 0:
            raise ValueError("negative exponent")
        result = IntPolynomial((1,))
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base.square()
        return result

    def derivative(self) -> IntPolynomial:
        return IntPolynomial(i * a for i, a in enumerate(self._c) if i)

    def content(self) -> int:
        from math import gcd

        g = 0
        for a in self._c:
            g = gcd(g, a)
            if g == 1:
                break
        return g

    def primitive(self) -> IntPolynomial:
        """Divide out the content and make the leading coefficient positive."""
        if not self._c:
            return self
        g = self.content()
        if self.leading < 0:
            g = -g
        if g == 1:
            return self
        return IntPolynomial(a // g for a in self._c)

    def reflect(self) -> IntPolynomial:
        """The polynomial ``p(-x)``."""
        return IntPolynomial(a if i % 2 == 0 else -a for i, a in enumerate(self._c))

    def taylor_shift(self, h: int) -> IntPolynomial:
        """The polynomial ``p(x + h)``."""
        c = list(self._c)
        n = len(c)
        for i in range(n - 1):
            for j in range(n - 2, i - 1, -1):
                c[j] += h * c[j + 1]
        return IntPolynomial(c)

    def __call__(self, x):
        return eval_poly(self, x)

    def divmod_exact_monic(self, divisor: IntPolynomial) -> tuple[IntPolynomial, IntPolynomial]:
        """Euclidean division by a divisor whose leading coefficient is +-1."""
        if divisor.leading not in (1, -1):
            raise ValueError("divisor must have unit leading coefficient")
        lc = divisor.leading
        r = list(self._c)
        d = divisor._c
        dn = len(d) - 1
        if len(r) - 1 < dn:
            return IntPolynomial(), self
        q = [0] * (len(r) - dn)
        for i in range(len(r) - 1, dn - 1, -1):
            t = r[i] * lc
            if t:
                q[i - dn] = t
                for j in range(dn + 1):
                    r[i - dn + j] -= t * d[j]
        return IntPolynomial(q), IntPolynomial(r[:dn])

    # serialisation
    def to_json(self) -> str:
        return json.dumps([str(a) for a in self._c])

    @classmethod
    def from_json(cls, text: str) -> IntPolynomial:
        data = json.loads(text)
        if not isinstance(data, list):
            raise ValueError("polynomial JSON must be an array")
        return cls(int(s) for s in data)


def eval_poly(poly: IntPolynomial | Sequence[int], x):
    """Horner evaluation; exact for ``int`` and ``Fraction`` arguments.

    Any numeric type supporting ``*`` and ``+`` with integers works, including
    ``float``, ``complex`` and ``mpmath`` numbers.
    """
    coeffs = poly.coeffs if isinstance(poly, IntPolynomial) else tuple(poly)
    if not coeffs:
        return x * 0
    acc = x * 0 + coeffs[-1]
    for a in reversed(coeffs[:-1]):
        acc = acc * x + a
    return acc


def _check_cap(degree: int, cap: int) -> None:
    if degree > cap:
        raise DegreeCapExceeded(f"degree {degree} exceeds the cap {cap}")


@lru_cache(maxsize=256)
def _iterates_c(a: int, n: int) -> tuple[IntPolynomial, ...]:
    seq = [IntPolynomial((a,))]
    c = IntPolynomial.x()
    for _ in range(n):
        seq.append(seq[-1].square() + c)
    return tuple(seq)


def iterate_poly(a: int, n: int, degree_cap: int = DEFAULT_DEGREE_CAP) -> IntPolynomial:
    """``F_n(c, a)`` as a polynomial in ``c``.

    Monic of degree ``2**(n-1)`` for ``n >= 1``; the constant ``a`` for ``n = 0``.
    """
    a = int(a)
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n >= 1:
        _check_cap(2 ** (n - 1), degree_cap)
    return _iterates_c(a, n)[n]


def difference_poly(a: int, k: int, p: int, degree_cap: int = DEFAULT_DEGREE_CAP) -> IntPolynomial:
    """``F_{k+p}(c, a) - F_k(c, a)``, whose roots form the set S_{a,k,p}."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    if p < 1:
        raise ValueError("p must be positive")
    _check_cap(2 ** (k + p - 1), degree_cap)
    seq = _iterates_c(int(a), k + p)
    return seq[k + p] - seq[k]


def _iterates_z_generic(c, n: int) -> list[list]:
    seq = [[0, 1]]
    for _ in range(n):
        sq = _square(seq[-1])
        sq[0] += c
        seq.append(sq)
    return seq


@lru_cache(maxsize=128)
def _iterates_z(c: Fraction, n: int) -> tuple[tuple, ...]:
    value = int(c) if c.denominator == 1 else c
    return tuple(tuple(s) for s in _iterates_z_generic(value, n))


def _clear_denominators(coeffs: Sequence) -> IntPolynomial:
    den = 1
    for a in coeffs:
        if isinstance(a, Fraction):
            den = lcm(den, a.denominator)
    return IntPolynomial(int(a * den) for a in coeffs).primitive() if den != 1 else IntPolynomial(coeffs)


def iterate_poly_z(c: int | Fraction, n: int, degree_cap: int = DEFAULT_DEGREE_CAP) -> IntPolynomial:
    """``F_n(c, z)`` as a polynomial in ``z`` for a fixed integer ``c``.

    Monic of degree ``2**n``. Rational ``c`` is accepted; denominators are then
    cleared, so the result is a primitive integer multiple of ``F_n(c, z)``.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    _check_cap(2**n, degree_cap)
    return _clear_denominators(_iterates_z(Fraction(c), n)[n])


def point_difference_poly(c: int | Fraction, k: int, p: int,
                          degree_cap: int = DEFAULT_DEGREE_CAP) -> IntPolynomial:
    """``F_{k+p}(c, z) - F_k(c, z)`` in ``z``; its roots form X_{c,k,p}.

    For non-integer rational ``c`` the result is scaled to a primitive integer
    polynomial with the same roots.
    """
    if k < 0 or p < 1:
        raise ValueError("need k >= 0 and p >= 1")
    _check_cap(2 ** (k + p), degree_cap)
    seq = _iterates_z(Fraction(c), k + p)
    return _clear_denominators(_sub(seq[k + p], seq[k]))


def telescoping_identity_check(a: int, n: int, degree_cap: int = DEFAULT_DEGREE_CAP) -> bool:
    """Exact check of ``F_{n+2} - F_{n+1} == (F_{n+1} - F_n)(F_{n+1} + F_n)``."""
    _check_cap(2 ** (n + 1), degree_cap)
    f = _iterates_c(int(a), n + 2)
    return f[n + 2] - f[n + 1] == (f[n + 1] - f[n]) * (f[n + 1] + f[n])
