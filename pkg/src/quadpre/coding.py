"""Real coding of ``f_c(z) = z**2 + c`` for ``c <= -2``.

Every preperiodic sign sequence names exactly one real point whose orbit
has those signs. The point is computed by bisection on a composition of
inverse branches ``g_c^eps(z) = eps*sqrt(z - c)``; on the parameter side,
:func:`gamma` solves ``zeta_eps(c) = a`` for ``c`` by a second bisection.

Arithmetic is binary64 by default and switches to ``gmpy2`` at higher
precision, either on request or automatically for long sequences.
"""

from __future__ import annotations

import contextlib
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import gmpy2

from .symdyn import SignSequence, psi_minus2, shift

__all__ = [
    "CodingError",
    "RealMapParams",
    "CriticalInterval",
    "g_branch",
    "fixed_point",
    "psi",
    "zeta",
    "gamma",
    "c_minus",
    "c_plus",
    "itinerary",
    "closed_forms",
    "conjugacy_residual",
    "orbit",
]

Z_TOL = 1e-12
C_TOL = 1e-12
# sequences with k + p above this are solved in extended precision
AUTO_MP_LENGTH = 10
AUTO_MP_BITS = 128


_MPFR = type(gmpy2.mpfr())


class CodingError(ArithmeticError):
    """Bisection lost its bracket; the message carries the offending values."""


class _Float:
    prec = 53
    tol_floor = 0.0

    @staticmethod
    def scope():
        return contextlib.nullcontext()

    @staticmethod
    def num(x):
        if isinstance(x, Fraction):
            return x.numerator / x.denominator
        return float(x)

    sqrt = staticmethod(math.sqrt)


class _MP:
    """gmpy2 arithmetic at a fixed mantissa width, entered with ``scope()``."""

    def __init__(self, prec: int):
        self.prec = prec
        self.context = gmpy2.context(gmpy2.get_context(), precision=prec)
        with self.context:
            self.tol_floor = gmpy2.mpfr(2) ** -(prec - 8)

    def scope(self):
        # a fresh copy each time: one context object cannot be entered twice
        return gmpy2.context(self.context)

    def num(self, x):
        if isinstance(x, Fraction):
            x = gmpy2.mpq(x.numerator, x.denominator)
        elif isinstance(x, float):
            return gmpy2.mpfr(x, self.prec)
        with self.context:
            return gmpy2.mpfr(x)

    @staticmethod
    def sqrt(x):
        return gmpy2.sqrt(x)


@lru_cache(maxsize=None)
def _arith(prec: int):
    return _Float() if prec <= 53 else _MP(prec)


def _pick_prec(prec, seq: SignSequence | None = None) -> int:
    if prec is None:
        prec = 53
        if seq is not None and seq.k + seq.p > AUTO_MP_LENGTH:
            prec = AUTO_MP_BITS
    return int(prec)


def _out(x, prec):
    return float(x) if prec <= 53 else x


# ---------------------------------------------------------------------------
# real fixed points and the invariant interval


@dataclass(frozen=True)
class RealMapParams:
    c: float
    alpha: float
    beta: float
    rho: float

    @classmethod
    def of(cls, c, prec: int = 53) -> RealMapParams:
        ar = _arith(prec)
        with ar.scope():
            c = ar.num(c)
            if c > 0.25:
                raise ValueError("real fixed points need c <= 1/4")
            root = ar.sqrt(1 - 4 * c)
            beta = (1 + root) / 2
            # alpha * beta = c; the quotient avoids cancellation for c << 0
            alpha = c / beta if c != 0 else c * 0
            rho = (1 + ar.sqrt(1 + 4 * abs(c))) / 2
        return cls(c, alpha, beta, rho)


@dataclass(frozen=True)
class CriticalInterval:
    c: float
    lower: float
    upper: float
    inner: float

    @classmethod
    def of(cls, c, prec: int = 53) -> CriticalInterval:
        ar = _arith(prec)
        with ar.scope():
            c = ar.num(c)
            _require_coding_range(c)
            beta = RealMapParams.of(c, prec).beta
            return cls(c, -beta, beta, ar.sqrt(max(-beta - c, 0 * c)))


def _require_coding_range(c) -> None:
    if c > -2:
        raise ValueError(f"coding needs c <= -2, got {c}")


def c_minus(a, prec: int = 53):
    ar = _arith(prec)
    with ar.scope():
        a = ar.num(a)
        return -a * a - ar.sqrt(a * a + 1) - 1


def c_plus(a, prec: int = 53):
    ar = _arith(prec)
    with ar.scope():
        a = ar.num(a)
        return -a * a + abs(a)


# ---------------------------------------------------------------------------
# inverse branches


def g_branch(c, eps: int, z):
    """``eps * sqrt(z - c)``, the branch of ``f_c^{-1}`` with sign ``eps``."""
    if eps not in (1, -1):
        raise ValueError("eps must be +1 or -1")
    if z < c:
        raise ValueError(f"g_branch needs z >= c (z={z}, c={c})")
    if isinstance(z, _MPFR) or isinstance(c, _MPFR):
        return eps * gmpy2.sqrt(z - c)
    return eps * math.sqrt(z - c)


def _compose(ar, c, word, z, beta):
    # innermost branch is the last symbol
    for eps in reversed(word):
        d = z - c
        if d < 0:
            d = 0 * d
        z = eps * ar.sqrt(d)
        if z > beta:
            z = beta
        elif z < -beta:
            z = -beta
    return z


@lru_cache(maxsize=1 << 15)
def _fixed_point_cached(c, word: tuple, prec: int, tol):
    ar = _arith(prec)
    with ar.scope():
        return _fixed_point_solve(ar, c, word, prec, tol)


def _fixed_point_solve(ar, c, word, prec, tol):
    pars = RealMapParams.of(c, prec)
    beta = pars.beta
    if len(word) == 1:
        return beta if word[0] == 1 else pars.alpha
    lo, hi = -beta, beta
    h_lo = _compose(ar, c, word, lo, beta) - lo
    h_hi = _compose(ar, c, word, hi, beta) - hi
    if h_lo < 0 or h_hi > 0:
        raise CodingError(
            f"no sign change for word {word} at c={c}: h(-beta)={h_lo}, h(beta)={h_hi}")
    # extended precision is only requested for accuracy, so ignore a float tol
    tol = ar.tol_floor if prec > 53 else tol
    for _ in range(4 * prec + 64):
        if hi - lo <= tol:
            break
        mid = (lo + hi) / 2
        if mid == lo or mid == hi:
            break
        if _compose(ar, c, word, mid, beta) - mid >= 0:
            lo = mid
        else:
            hi = mid
    return (lo + hi) / 2


def fixed_point(c, word, tol: float = Z_TOL, prec: int | None = None):
    """Unique fixed point of ``g^{w_0} o ... o g^{w_{p-1}}`` in ``[-beta_c, beta_c]``.

    Words of length one use the closed forms ``beta_c`` and ``alpha_c``.
    """
    word = tuple(int(s) for s in word)
    if not word:
        raise ValueError("word must be nonempty")
    if prec is None:
        prec = AUTO_MP_BITS if len(word) > AUTO_MP_LENGTH else 53
    ar = _arith(prec)
    c = ar.num(c)
    _require_coding_range(c)
    return _out(_fixed_point_cached(c, word, prec, tol), prec)


# ---------------------------------------------------------------------------
# the coding map


@lru_cache(maxsize=1 << 16)
def _psi_cached(c, seq: SignSequence, prec: int, tol):
    ar = _arith(prec)
    beta = RealMapParams.of(c, prec).beta
    z = _fixed_point_cached(c, seq.cycle, prec, tol)
    with ar.scope():
        return _compose(ar, c, seq.prefix, z, beta)


def psi(c, seq: SignSequence | str, tol: float = Z_TOL, prec: int | None = None,
        closed_form: bool = True):
    """The real point whose orbit under ``f_c`` has sign sequence ``seq``.

    At ``c == -2`` the exact cosine formula is used unless ``closed_form`` is
    false; the bisection route there needs extra precision because the
    branch ``g^eps`` has infinite slope at ``z = -2``, and it is raised to at
    least 128 bits automatically.
    """
    if isinstance(seq, str):
        seq = SignSequence.parse(seq)
    seq = seq.canonical()
    prec = _pick_prec(prec, seq)
    if c == -2:
        if closed_form:
            return psi_minus2(seq, prec)[1]
        prec = max(prec, AUTO_MP_BITS)
    ar = _arith(prec)
    cc = ar.num(c)
    _require_coding_range(cc)
    return _out(_psi_cached(cc, seq, prec, tol), prec)


def zeta(seq: SignSequence | str, c, **kw):
    """``psi`` with the arguments swapped: a function of the parameter."""
    return psi(c, seq, **kw)


def itinerary(c, z, n: int) -> list[int]:
    """Signs of ``z, f_c(z), ..., f_c^{n-1}(z)`` (zero maps to ``0``)."""
    out = []
    for _ in range(n):
        out.append((z > 0) - (z < 0))
        z = z * z + c
    return out


def gamma(a, seq: SignSequence | str, tol: float = C_TOL, prec: int | None = None):
    """The parameter ``c`` in ``[c_a^-, c_a^+]`` with ``zeta_seq(c) = a``.

    Bisects ``sgn(a) * zeta_seq(c) - |a|``, which is nonnegative at the left
    end and nonpositive at the right end.
    """
    if isinstance(seq, str):
        seq = SignSequence.parse(seq)
    seq = seq.canonical()
    if abs(a) < 2:
        raise ValueError("gamma needs |a| >= 2")
    sgn = 1 if a > 0 else -1
    if seq[0] != sgn:
        raise ValueError(f"first sign of {seq} must equal sgn(a) = {sgn}")
    return _gamma_cached(a, seq, float(tol), _pick_prec(prec, seq))


@lru_cache(maxsize=1 << 14)
def _gamma_cached(a, seq: SignSequence, tol: float, prec: int):
    ar = _arith(prec)
    with ar.scope():
        return _gamma_solve(ar, a, seq, tol, prec)


def _gamma_solve(ar, a, seq, tol, prec):
    sgn = 1 if a > 0 else -1
    av = abs(ar.num(a))
    lo, hi = c_minus(a, prec), c_plus(a, prec)
    # widen the left end by one unit in the last place; keep hi <= -2
    if prec <= 53:
        lo = math.nextafter(lo, -math.inf)
    else:
        lo = gmpy2.next_below(lo)
    hi = min(hi, ar.num(-2))

    def phi(c):
        if c == -2:
            v = psi_minus2(seq, prec)[1]
        else:
            # inner solve to full working precision keeps phi's noise floor low
            v = _psi_cached(c, seq, prec, 0.0)
        return sgn * v - av

    slack = 1e-9 * max(1.0, float(av))
    f_lo, f_hi = phi(lo), phi(hi)
    if f_lo < -slack or f_hi > slack:
        raise CodingError(f"no bracket for gamma({a}, {seq}): phi(lo)={f_lo}, phi(hi)={f_hi}")
    tol = ar.tol_floor * abs(lo) if prec > 53 else tol
    for _ in range(4 * prec + 64):
        if hi - lo <= tol:
            break
        mid = (lo + hi) / 2
        if mid == lo or mid == hi:
            break
        if phi(mid) >= 0:
            lo = mid
        else:
            hi = mid
    return _out((lo + hi) / 2, prec)


# ---------------------------------------------------------------------------
# closed forms for the short families


def closed_forms(eps: int) -> dict[str, callable]:
    """Explicit ``zeta`` for four sequences starting with ``eps``.

    Keys are sequence texts, values map ``c`` to the coded point.
    """
    ch = "+" if eps == 1 else "-"

    def alpha(c):
        return RealMapParams.of(c).alpha

    def beta(c):
        return RealMapParams.of(c).beta

    return {
        f"{ch}|-": lambda c: -eps * alpha(c),
        f"{ch}|+": lambda c: eps * beta(c),
        f"{ch}+|-": lambda c: eps * math.sqrt(-alpha(c) - c),
        f"{ch}-|+": lambda c: eps * math.sqrt(max(-beta(c) - c, 0.0)),
    }


def conjugacy_residual(c, seq: SignSequence, **kw) -> float:
    """``|f_c(psi(seq)) - psi(shift(seq))|``."""
    z = psi(c, seq, **kw)
    w = psi(c, shift(seq.canonical()), **kw)
    return abs(float(orbit(c, z, 2)[1] - w))


def orbit(c, z, n: int) -> list:
    """``z, f_c(z), ..., f_c^{n-1}(z)`` in the precision of ``z``."""
    prec = z.precision if isinstance(z, _MPFR) else 53
    ar = _arith(prec)
    with ar.scope():
        cc = ar.num(c) if prec > 53 else float(c)
        out = []
        for _ in range(n):
            out.append(z)
            z = z * z + cc
    return out
