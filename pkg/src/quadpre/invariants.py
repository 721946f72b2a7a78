"""A fast self-check of the structural invariants, used by ``quadpre check``."""

from __future__ import annotations

from . import coding, paramsets, poly, symdyn


def _degrees_and_monicity():
    for a in range(-3, 4):
        for n in range(1, 8):
            f = poly.iterate_poly(a, n)
            if f.degree != 2 ** (n - 1) or f.leading != 1:
                return False
    return True


def _telescoping():
    return all(poly.telescoping_identity_check(a, n) for a in range(-3, 4) for n in range(5))


def _sign_symmetry():
    return all(poly.difference_poly(a, k, p) == poly.difference_poly(-a, k, p)
               for a in range(1, 4) for k in range(1, 4) for p in range(1, 3))


def _counting_minus2():
    for k in range(0, 6):
        for p in range(1, 7 - k):
            ts = {symdyn.angle_minus2(s) for s in symdyn.enumerate_sequences(k, p)}
            if len(ts) != symdyn.count_X_minus2(k, p):
                return False
    return True


def _conjugacy():
    for c in (-2.5, -3.0):
        for k in range(0, 4):
            for p in range(1, 5 - k):
                for s in symdyn.enumerate_sequences(k, p):
                    if coding.conjugacy_residual(c, s) > 1e-9:
                        return False
    return True


def _theorem_small_depth():
    cases = {(0, 1): {-2, -1, 0}, (0, 2): {-2}, (1, 2): {-3, -2}, (0, 3): set()}
    return all(paramsets.intersect(a, b, 3, 3).values() == v for (a, b), v in cases.items())


CHECKS = [
    ("degree and monicity of F_n", _degrees_and_monicity),
    ("telescoping identity", _telescoping),
    ("difference polynomials even in a", _sign_symmetry),
    ("point count at c = -2", _counting_minus2),
    ("conjugacy residuals", _conjugacy),
    ("classification at depth 3", _theorem_small_depth),
]


def run_quick_checks() -> list[tuple[str, bool]]:
    out = []
    for name, fn in CHECKS:
        try:
            ok = bool(fn())
        except Exception:  # a crash counts as a failed check
            ok = False
        out.append((name, ok))
    return out
