"""Preperiodic sign sequences and the exact coding at ``c = -2``.

A sign sequence is stored as a finite prefix followed by a repeating cycle,
both words over ``{+1, -1}``. Text form is ``"+-|+"`` (prefix, bar, cycle).
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import gmpy2

from .poly import ResourceLimit

__all__ = [
    "SignSequence",
    "canonicalize",
    "shift",
    "enumerate_sequences",
    "delta_sequence",
    "psi_minus2",
    "angle_minus2",
    "collides_at_minus2",
    "count_X_minus2",
    "ENUMERATION_CAP",
    "EnumerationCapExceeded",
    "enumerate",
]

ENUMERATION_CAP = 20


class EnumerationCapExceeded(ResourceLimit):
    """``k + p`` is above the enumeration cap."""

_CHAR = {1: "+", -1: "-"}
_SIGN = {"+": 1, "-": -1}


def _check_word(word, allow_empty: bool) -> tuple[int, ...]:
    word = tuple(int(s) for s in word)
    if not allow_empty and not word:
        raise ValueError("cycle must be nonempty")
    if any(s not in (1, -1) for s in word):
        raise ValueError(f"signs must be +1 or -1, got {word}")
    return word


@dataclass(frozen=True)
class SignSequence:
    """``prefix`` then ``cycle`` repeated forever.

    Instances need not be canonical; :meth:`canonical` gives the minimal
    representation and equality of infinite sequences should be tested on
    canonical forms.
    """

    prefix: tuple[int, ...]
    cycle: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "prefix", _check_word(self.prefix, True))
        object.__setattr__(self, "cycle", _check_word(self.cycle, False))

    @property
    def k(self) -> int:
        return len(self.prefix)

    @property
    def p(self) -> int:
        return len(self.cycle)

    def __getitem__(self, n: int) -> int:
        if n < 0:
            raise IndexError(n)
        if n < self.k:
            return self.prefix[n]
        return self.cycle[(n - self.k) % self.p]

    def head(self, n: int) -> tuple[int, ...]:
        return tuple(self[i] for i in range(n))

    def canonical(self) -> SignSequence:
        return canonicalize(self.prefix, self.cycle)

    def is_canonical(self) -> bool:
        return self == self.canonical()

    def same_sequence(self, other: SignSequence) -> bool:
        return self.canonical() == other.canonical()

    def shift(self) -> SignSequence:
        return shift(self)

    def __str__(self) -> str:
        return "".join(_CHAR[s] for s in self.prefix) + "|" + "".join(_CHAR[s] for s in self.cycle)

    @classmethod
    def parse(cls, text: str) -> SignSequence:
        """Parse ``"+-|+"``; a missing bar means a purely periodic sequence."""
        text = text.strip()
        pre, bar, cyc = text.rpartition("|")
        if not bar:
            pre, cyc = "", text
        try:
            return cls(tuple(_SIGN[ch] for ch in pre), tuple(_SIGN[ch] for ch in cyc))
        except KeyError as exc:
            raise ValueError(f"bad sign sequence {text!r}") from exc

    def to_json(self) -> str:
        return json.dumps([list(self.prefix), list(self.cycle)])

    @classmethod
    def from_json(cls, data) -> SignSequence:
        if isinstance(data, str):
            data = json.loads(data)
        pre, cyc = data
        return cls(tuple(pre), tuple(cyc))


def _minimal_period(word: tuple[int, ...]) -> tuple[int, ...]:
    n = len(word)
    for d in range(1, n + 1):
        if n % d == 0 and word == word[:d] * (n // d):
            return word[:d]
    return word


def canonicalize(prefix, cycle) -> SignSequence:
    """Minimal (preperiod, period) representation of the same sequence."""
    prefix = _check_word(prefix, True)
    cycle = _minimal_period(_check_word(cycle, False))
    # absorb prefix symbols that already agree with the cycle read backwards
    while prefix and prefix[-1] == cycle[-1]:
        prefix = prefix[:-1]
        cycle = cycle[-1:] + cycle[:-1]
    return SignSequence(prefix, cycle)


def shift(seq: SignSequence) -> SignSequence:
    if seq.prefix:
        return canonicalize(seq.prefix[1:], seq.cycle)
    return canonicalize((), seq.cycle[1:] + seq.cycle[:1])


def enumerate_sequences(k: int, p: int, first_sign: int | None = None,
                        distinct: bool = False, cap: int = ENUMERATION_CAP) -> list[SignSequence]:
    """All of ``Sigma*_{k,p}``: every choice of the first ``k + p`` symbols.

    Entries keep the ``(k, p)`` shape, so sequences with smaller preperiod or
    period appear once per representation. ``distinct=True`` canonicalizes and
    drops repeats (order of first appearance is kept).
    """
    if k < 0 or p < 1:
        raise ValueError("need k >= 0 and p >= 1")
    if k + p > cap:
        raise EnumerationCapExceeded(f"k + p = {k + p} exceeds enumeration cap {cap}")
    if first_sign not in (None, 1, -1):
        raise ValueError("first_sign must be +1, -1 or None")
    out = []
    for word in itertools.product((1, -1), repeat=k + p):
        if first_sign is not None and word[0] != first_sign:
            continue
        out.append(SignSequence(word[:k], word[k:]))
    if distinct:
        seen, uniq = set(), []
        for s in out:
            cs = s.canonical()
            if cs not in seen:
                seen.add(cs)
                uniq.append(cs)
        out = uniq
    return out


def delta_sequence(seq: SignSequence, n_terms: int) -> tuple[int, ...]:
    """``delta_n`` with ``delta_{-1} = 0``; each ``-1`` symbol flips the bit."""
    d, out = 0, []
    for n in range(n_terms):
        if seq[n] == -1:
            d = 1 - d
        out.append(d)
    return tuple(out)


@lru_cache(maxsize=1 << 16)
def angle_minus2(seq: SignSequence) -> Fraction:
    """Exact ``t = sum delta_n 2**-(n+1)`` in ``[0, 1]``.

    After the prefix the delta bits repeat with period ``p`` when the cycle
    has an even number of ``-1`` symbols, and ``2p`` otherwise, so ``t`` is a
    finite sum plus one geometric tail.
    """
    k, p = seq.k, seq.p
    period = p if seq.cycle.count(-1) % 2 == 0 else 2 * p
    bits = delta_sequence(seq, k + period)
    head = int("".join(map(str, bits[:k])) or "0", 2)
    tail = int("".join(map(str, bits[k:])), 2)
    return Fraction(head, 2 ** k) + Fraction(tail, 2 ** k * (2 ** period - 1))


# angles where 2 cos(pi t) is an integer
_EXACT_COS = {Fraction(0): 2, Fraction(1, 3): 1, Fraction(1, 2): 0, Fraction(2, 3): -1, Fraction(1): -2}


def psi_minus2(seq: SignSequence, prec: int = 53):
    """``(t, 2 cos(pi t))``: exact angle and the coded point for ``c = -2``.

    The value is a float at the default precision and an ``mpfr`` otherwise.
    """
    t = angle_minus2(seq)
    if t in _EXACT_COS:
        v = _EXACT_COS[t]
        return t, (float(v) if prec <= 53 else gmpy2.mpfr(v, prec))
    work = max(prec, 53) + 16
    with gmpy2.context(gmpy2.get_context(), precision=work):
        v = 2 * gmpy2.cos(gmpy2.const_pi() * gmpy2.mpq(t.numerator, t.denominator))
    if prec <= 53:
        return t, float(v)
    return t, gmpy2.mpfr(v, prec)


def collides_at_minus2(s1: SignSequence, s2: SignSequence) -> bool:
    """Whether ``s1`` and ``s2`` code the same point of ``f_{-2}``.

    The pattern: both eventually ``+1``; they agree up to index ``k - 3``,
    differ at ``k - 2``, both read ``-1`` at ``k - 1`` and ``+1`` from ``k``
    on, for some ``k >= 2``.
    """
    a, b = s1.canonical(), s2.canonical()
    if a == b or a.cycle != (1,) or b.cycle != (1,):
        return False
    n = max(a.k, b.k) + 1
    j0 = next(j for j in range(n) if a[j] != b[j])
    k = j0 + 2
    return a.k <= k and b.k <= k and a[k - 1] == -1 and b[k - 1] == -1


def count_X_minus2(k: int, p: int) -> int:
    if k == 0:
        return 2 ** p
    return 2 ** (k + p) - 2 ** (k - 1) + 1


# short alias; shadows the builtin only for ``from symdyn import *`` users
enumerate = enumerate_sequences  # noqa: A001
