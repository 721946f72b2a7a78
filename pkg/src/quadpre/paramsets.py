"""Parameter sets ``S_{a,k,p}``, point sets ``X_{c,k,p}`` and their intersections.

``S_{a,k,p}`` is the zero set of the monic integer polynomial
``F_{k+p}(c, a) - F_k(c, a)``. For ``|a| >= 2`` it is real and lies in
``[c_a^-, c_a^+]``, and the coding solver gives a second, independent
description of it. Intersections of two such families are decided by exact
integer orbit checks plus a modular gcd certificate ruling out non-integer
common roots up to the requested depth.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from math import isqrt

from . import modular
from .coding import c_minus, c_plus, gamma
from .poly import (DEFAULT_DEGREE_CAP, IntPolynomial, difference_poly, iterate_poly,
                   point_difference_poly)
from .roots import (DEFAULT_TOL, RootSet, conjugates_in_halfopen_interval, distinct_root_count,
                    isolate_roots)
from .symdyn import enumerate_sequences

__all__ = [
    "R_bound",
    "ParamSetReport",
    "IntersectionReport",
    "param_set",
    "point_set",
    "is_preperiodic_exact",
    "orbit_status",
    "intersect",
    "theorem_prediction",
    "adjacent_family_check",
    "genexv_family_check",
    "nonstabilization_check",
    "nonstabilization_counts",
]

log = logging.getLogger(__name__)

DEFAULT_DEPTH = 6
CROSS_CHECK_MAX_LENGTH = 10


def R_bound(a) -> float:
    """Radius of the disk containing every parameter for which ``a`` is preperiodic."""
    x = abs(a) ** 2
    return x + math.sqrt(x + 1) + 1


def _r_floor(a: int) -> int:
    # floor(R_a) for integer a, exactly
    x = a * a
    return x + isqrt(x + 1) + 1


# ---------------------------------------------------------------------------
# exact orbits


def orbit_status(c, a, step_cap: int = 10_000):
    """Classify the orbit of ``a`` under ``z**2 + c`` with exact arithmetic.

    Returns ``("preperiodic", k, p)``, ``("escaped", n)`` once ``|z|``
    provably exceeds the escape radius at step ``n``, or ``("cap", step_cap)``.
    ``c`` and ``a`` may be integers or fractions.
    """
    c, z = Fraction(c), Fraction(a)
    bound = 1 + 4 * abs(c)
    seen = {}
    for n in range(step_cap + 1):
        if z in seen:
            k = seen[z]
            return ("preperiodic", k, n - k)
        seen[z] = n
        t = 2 * abs(z) - 1
        if t > 0 and t * t > bound:
            return ("escaped", n)
        z = z * z + c
    return ("cap", step_cap)


def is_preperiodic_exact(c, a, step_cap: int = 10_000) -> tuple[int, int] | None:
    """Minimal ``(preperiod, period)`` of ``a`` under ``z**2 + c``, or ``None``."""
    st = orbit_status(c, a, step_cap)
    return (st[1], st[2]) if st[0] == "preperiodic" else None


# ---------------------------------------------------------------------------
# parameter sets


@dataclass
class ParamSetReport:
    a: int
    k: int
    p: int
    roots: RootSet
    certified_real_count: int | None
    R_a: float
    interval: tuple[float, float] | None
    elements: list[dict] = field(default_factory=list)
    within_disk: bool = True

    def values(self) -> list:
        return [e["value"] for e in self.elements]

    def integer_values(self) -> set[int]:
        return {e["value"] for e in self.elements if e["kind"].startswith("exact-integer")}

    def real_values(self) -> list[float]:
        return sorted(float(e["value"]) for e in self.elements if not isinstance(e["value"], complex))

    def to_dict(self) -> dict:
        def enc(e):
            d = dict(e)
            v = d["value"]
            if isinstance(v, complex):
                d["value"] = [repr(v.real), repr(v.imag)]
            elif isinstance(v, int):
                d["value"] = str(v)
            else:
                d["value"] = repr(float(v))
            return d

        return {
            "a": self.a, "k": self.k, "p": self.p,
            "R_a": repr(self.R_a),
            "interval": None if self.interval is None else [repr(x) for x in self.interval],
            "certified_real_count": self.certified_real_count,
            "distinct_count": len(self.elements),
            "within_disk": self.within_disk,
            "elements": [enc(e) for e in self.elements],
            "roots": self.roots.to_dict(),
        }


def _elements_from_roots(rs: RootSet) -> list[dict]:
    out = []
    for r, m in rs.exact_integer_roots:
        out.append({"value": r, "mult": m, "kind": "exact-integer"})
    for lo, hi, m in rs.isolated_real_roots:
        out.append({"value": float((lo + hi) / 2), "mult": m, "kind": "sturm-isolated",
                    "interval": [str(lo), str(hi)]})
    out.sort(key=lambda e: float(e["value"]))
    for z, r, m in rs.complex_roots:
        out.append({"value": z, "mult": m, "kind": "complex-certified", "radius": r})
    return out


def param_set(a: int, k: int, p: int, tol: float = DEFAULT_TOL, cross_check: bool | None = None,
              degree_cap: int = DEFAULT_DEGREE_CAP) -> ParamSetReport:
    """Certified root set of ``F_{k+p}(c, a) - F_k(c, a)`` with bound checks.

    For ``|a| >= 2`` only real roots are isolated; the Sturm count must equal
    the degree, and (by default for ``k + p <= 10``) the roots are matched
    one-to-one against ``gamma(a, seq)`` over sequences starting with
    ``sgn(a)``.
    """
    a = int(a)
    D = difference_poly(a, k, p, degree_cap)
    Ra = R_bound(a)
    interval = None
    if abs(a) >= 2:
        interval = (c_minus(a), c_plus(a))
        rs = isolate_roots(D, tol, real_only=True)
        n_real = rs.distinct_count
        if n_real != D.degree:
            # not all real after all: fall back and let the checks below flag it
            rs = isolate_roots(D, tol)
    else:
        rs = isolate_roots(D, tol)
        n_real = len(rs.exact_integer_roots) + len(rs.isolated_real_roots)
    rep = ParamSetReport(a, k, p, rs, n_real, Ra, interval, _elements_from_roots(rs))
    rep.within_disk = all(abs(e["value"]) <= Ra + 1e-9 for e in rep.elements)
    if abs(a) >= 2:
        if cross_check is None:
            cross_check = k + p <= CROSS_CHECK_MAX_LENGTH
        if cross_check:
            _cross_check_gamma(rep, tol)
    return rep


def _cross_check_gamma(rep: ParamSetReport, tol: float) -> None:
    sgn = 1 if rep.a > 0 else -1
    gs = sorted(gamma(rep.a, s) for s in enumerate_sequences(rep.k, rep.p, sgn))
    reals = [e for e in rep.elements if not isinstance(e["value"], complex)]
    if len(gs) != len(reals):
        raise AssertionError(f"{len(gs)} coding parameters but {len(reals)} real roots")
    for g, e in zip(gs, reals):
        if abs(g - float(e["value"])) > 1e-9:
            raise AssertionError(f"coding parameter {g} does not match root {e['value']}")
        e["kind"] = e["kind"] + "+coding-confirmed"


def point_set(c, k: int, p: int, tol: float = DEFAULT_TOL,
              degree_cap: int = DEFAULT_DEGREE_CAP) -> RootSet:
    """Roots in ``z`` of ``F_{k+p}(c, z) - F_k(c, z)`` for rational ``c``."""
    return isolate_roots(point_difference_poly(c, k, p, degree_cap), tol)


def point_set_is_symmetric(c, k: int, p: int) -> bool:
    """Exact ``z -> -z`` symmetry: every odd coefficient vanishes."""
    return all(x == 0 for x in point_difference_poly(c, k, p).coeffs[1::2])


# ---------------------------------------------------------------------------
# multiplicities of integer parameters


def root_multiplicity(a: int, k: int, p: int, c0: int) -> int:
    """Order of vanishing of ``F_{k+p}(c, a) - F_k(c, a)`` at ``c = c0``.

    Works on truncated Taylor series in ``h = c - c0``; the polynomial itself
    is never formed.
    """
    order = 8
    while True:
        f = [a] + [0] * (order - 1)
        hist = [f]
        for _ in range(k + p):
            g = [0] * order
            for i, x in enumerate(f):
                if x:
                    for j in range(order - i):
                        g[i + j] += x * f[j]
            g[0] += c0
            if order > 1:
                g[1] += 1
            f = g
            hist.append(f)
        d = [x - y for x, y in zip(hist[k + p], hist[k])]
        for i, x in enumerate(d):
            if x:
                return i
        order *= 2


# ---------------------------------------------------------------------------
# intersections


def theorem_prediction(a: int, b: int) -> set[int] | None:
    """The classified value of ``S_a cap S_b`` for integers with ``|a| != |b|``."""
    a, b = sorted((abs(int(a)), abs(int(b))))
    if a == b:
        return None
    if a == 0 and b == 1:
        return {-2, -1, 0}
    if a == 0 and b == 2:
        return {-2}
    if a >= 1 and b == a + 1:
        return {-a * a - a - 1, -a * a - a}
    return set()


@dataclass
class IntersectionReport:
    a: int
    b: int
    k_max: int
    p_max: int
    common: list[dict]
    algebraic_common: list[dict]
    predicted: set[int] | None
    verdict: bool | None
    complete: bool
    gcd_certified: bool
    certificate: list[str] = field(default_factory=list)

    def values(self) -> set:
        return {e["value"] for e in self.common}

    def to_dict(self) -> dict:
        return {
            "a": self.a, "b": self.b,
            "depth": {"k_max": self.k_max, "p_max": self.p_max},
            "common": [
                {"value": str(e["value"]), "kind": e["kind"],
                 "a_preperiod_period": list(e["a"]), "b_preperiod_period": list(e["b"])}
                for e in self.common
            ],
            "algebraic_common": [
                {"value": [repr(e["value"].real), repr(e["value"].imag)], "kind": e["kind"]}
                for e in self.algebraic_common
            ],
            "predicted": None if self.predicted is None else sorted(self.predicted),
            "verdict": self.verdict,
            "complete": self.complete,
            "gcd_certified": self.gcd_certified,
            "certificate": self.certificate,
        }


def _completeness(a: int, b: int, found: list[int], notes: list[str]) -> bool:
    """Replay the localization argument with exact integer comparisons."""
    a, b = sorted((abs(a), abs(b)))
    if a == b or b < 2:
        notes.append("no localization argument applies")
        return False
    X = b * b - b  # -c_b^+
    lhs = X - a * a - 1  # compare -c_b^+ with R_a = a^2 + sqrt(a^2 + 1) + 1
    if lhs > 0 and lhs * lhs > a * a + 1:
        notes.append(f"disk |c| <= R_{a} misses segment [c_{b}^-, {-X}]: intersection empty")
        return True
    if lhs > 0 and lhs * lhs == a * a + 1:
        notes.append(f"disk meets segment only at c = {-X}: intersection within {{{-X}}}")
        return True
    if a >= 1 and b == a + 1:
        m = -X
        # m - 2 < -R_a  <=>  sqrt(a^2 + 1) < a + 1
        if not (a * a + 1 < (a + 1) ** 2):
            return False
        notes.append(f"common elements are real algebraic integers in ({m - 2}, {m}]")
        poly = IntPolynomial([1])
        for c0 in found:
            poly = poly * IntPolynomial([-c0, 1])
        ok = conjugates_in_halfopen_interval(poly, m)
        notes.append(f"every candidate lies in {{{m - 1}, {m}}}: {ok}")
        return ok
    notes.append("segment meets the disk; no mechanical argument")
    return False


def intersect(a: int, b: int, k_max: int = DEFAULT_DEPTH, p_max: int = DEFAULT_DEPTH,
              degree_cap: int = DEFAULT_DEGREE_CAP, primes=modular.PRIMES) -> IntersectionReport:
    """Common parameters of ``a`` and ``b`` with preperiod ``<= k_max`` and period ``<= p_max``.

    Integer candidates ``|c| <= min(R_a, R_b)`` are decided exactly by orbit
    iteration. Then for each pair of periods the degree of
    ``gcd(D_a, D_b)`` modulo a word-sized prime is compared with the total
    multiplicity those integers account for; equality proves there is no
    other common root. A mismatch that survives several primes triggers an
    exact gcd and the extra roots are reported (and logged) separately.
    """
    a, b = int(a), int(b)
    if a * a == b * b:
        raise ValueError("|a| == |b|: the parameter sets coincide beyond preperiod 0")
    if 2 ** (k_max + p_max - 1) > degree_cap:
        from .poly import DegreeCapExceeded
        raise DegreeCapExceeded(f"depth ({k_max}, {p_max}) exceeds degree cap {degree_cap}")
    r = min(_r_floor(a), _r_floor(b))
    common = []
    for c0 in range(-r, r + 1):
        sa = is_preperiodic_exact(c0, a)
        sb = is_preperiodic_exact(c0, b)
        if sa and sb and sa[0] <= k_max and sb[0] <= k_max and sa[1] <= p_max and sb[1] <= p_max:
            common.append({"value": c0, "kind": "exact-integer", "a": sa, "b": sb})
    notes: list[str] = []
    certified, extra = _certify_no_other_common(a, b, k_max, p_max, common, primes, degree_cap, notes)
    found = [e["value"] for e in common]
    predicted = theorem_prediction(a, b)
    verdict = None if predicted is None else (set(found) == predicted and not extra)
    complete = _completeness(a, b, found, notes) and certified
    return IntersectionReport(a, b, k_max, p_max, common, extra, predicted, verdict,
                              complete, certified, notes)


def _certify_no_other_common(a, b, k_max, p_max, common, primes, degree_cap, notes):
    extra: list[dict] = []
    all_ok = True
    for p in range(1, p_max + 1):
        for q in range(1, p_max + 1):
            expected = 0
            for e in common:
                c0 = e["value"]
                (ka, pa), (kb, pb) = e["a"], e["b"]
                if p % pa == 0 and q % pb == 0:
                    expected += min(root_multiplicity(a, k_max, p, c0),
                                    root_multiplicity(b, k_max, q, c0))
            degs = []
            for prime in primes[:3]:
                d = modular.gcd_degree((a, k_max, p), (b, k_max, q), prime)
                degs.append(d)
                if d == expected:
                    break
            if min(degs) == expected:
                continue
            all_ok = False
            log.warning("gcd of periods (%d, %d) has degree %d, integers explain %d; "
                        "computing exact gcd", p, q, min(degs), expected)
            extra.extend(_exact_extra_roots(a, b, k_max, p, q, degree_cap))
    notes.append("modular gcd degrees match integer multiplicities for all period pairs"
                 if all_ok else "non-integer common roots found; see algebraic_common")
    return all_ok, _dedup_complex(extra)


def _exact_extra_roots(a, b, k, p, q, degree_cap) -> list[dict]:
    f = difference_poly(a, k, p, degree_cap)
    g = difference_poly(b, k, q, degree_cap)
    h = modular.crt_gcd(f, g)
    if h is None:
        from .roots import poly_gcd
        h = poly_gcd(f, g)
    rs = isolate_roots(h)
    out = []
    for e in _elements_from_roots(rs):
        if e["kind"] != "exact-integer":
            v = e["value"]
            out.append({"value": complex(v), "kind": e["kind"], "periods": (p, q)})
    return out


def _dedup_complex(items: list[dict]) -> list[dict]:
    out: list[dict] = []
    for e in items:
        if all(abs(e["value"] - f["value"]) > 1e-8 for f in out):
            out.append(e)
    return out


# ---------------------------------------------------------------------------
# small structural checks


def adjacent_family_check(a: int) -> bool:
    """The two integer families shared by ``a`` and ``a + 1``.

    ``-a^2 - a - 1`` is 2-periodic for ``a`` and strictly preperiodic onto
    that cycle for ``a + 1``; ``-a^2 - a`` is a fixed-point parameter for
    ``a + 1`` and reaches one in a step for ``a``.
    """
    a = int(a)

    def fits(c, x, k, p):
        st = is_preperiodic_exact(c, x)
        return st is not None and st[0] <= k and p % st[1] == 0

    c1, c2 = -a * a - a - 1, -a * a - a
    return (fits(c1, a, 0, 2) and fits(c1, a + 1, 1, 2)
            and fits(c2, a, 1, 1) and fits(c2, a + 1, 0, 1))


# contract name for the check above
genexv_family_check = adjacent_family_check


def nonstabilization_counts(a: int, n_max: int) -> list[int]:
    return [distinct_root_count(difference_poly(a, n, 1)) for n in range(n_max + 1)]


def nonstabilization_check(a: int, n_max: int) -> bool:
    """The chain ``S_{a,n,1}`` keeps growing for ``n < n_max``.

    A step ``n -> n + 1`` may only stall when ``F_{n+1} + F_n`` is exactly
    ``c**(2**n)`` (all new roots at ``0``, already present), and two stalls in
    a row are impossible; anything else is a failure. The last step must grow.
    """
    counts = nonstabilization_counts(a, n_max)
    prev_stall = False
    for n in range(n_max):
        if counts[n + 1] > counts[n]:
            prev_stall = False
            continue
        s = iterate_poly(a, n + 1) + iterate_poly(a, n)
        if prev_stall or counts[n + 1] < counts[n] or s != IntPolynomial.x() ** (2 ** n):
            return False
        prev_stall = True
    return not prev_stall
