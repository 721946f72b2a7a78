import math

import gmpy2
import pytest
import sympy
from hypothesis import given, settings, strategies as st

from quadpre import coding
from quadpre.coding import (CodingError, RealMapParams, c_minus, c_plus, closed_forms,
                            conjugacy_residual, fixed_point, g_branch, gamma, itinerary, orbit,
                            psi, zeta)
from quadpre.poly import difference_poly
from quadpre.roots import real_roots_in_interval
from quadpre.symdyn import SignSequence, enumerate_sequences, psi_minus2

params = st.floats(min_value=-12.0, max_value=-2.0)


def test_g_branch_examples():
    assert g_branch(-2, 1, 2) == 2
    assert g_branch(-2, -1, -1) == -1
    assert g_branch(-6, 1, -6) == 0
    with pytest.raises(ValueError):
        g_branch(-2, 1, -3)
    with pytest.raises(ValueError):
        g_branch(-2, 0, 1)


def test_fixed_point_examples():
    assert fixed_point(-2, (1,)) == 2
    assert fixed_point(-2, (-1,)) == pytest.approx(-1, abs=1e-15)


def test_fixed_point_period_two_against_exact_solve():
    z = sympy.Symbol("z")
    f2 = sympy.expand(((z**2 - 3)**2 - 3) - z)
    # the period-2 points are roots of f2 / (z^2 - z - 3)
    cyc = sympy.solve(sympy.cancel(f2 / (z**2 - z - 3)), z)
    got = fixed_point(-3, (1, -1))
    positive = [float(r) for r in cyc if float(r) > 0]
    assert got == pytest.approx(positive[0], abs=1e-12)
    assert got == pytest.approx(1.0, abs=1e-12)
    assert fixed_point(-3, (-1, 1)) == pytest.approx(-2.0, abs=1e-12)


def test_psi_examples():
    assert psi(-2, "|+") == 2
    assert psi(-2, "+-|+") == 0
    assert psi(-2.5, "|-") == pytest.approx((1 - math.sqrt(11)) / 2, abs=1e-12)
    assert zeta("|-", -2) == pytest.approx(-1, abs=1e-15)
    for c in (-2.0, -3.3, -7.0):
        assert zeta("|+", c) == pytest.approx(RealMapParams.of(c).beta, abs=1e-12)


def test_domain_errors():
    with pytest.raises(ValueError):
        psi(-1.5, "|+")
    with pytest.raises(ValueError):
        fixed_point(-1, (1,))
    with pytest.raises(ValueError):
        fixed_point(-3, ())
    with pytest.raises(ValueError):
        gamma(1, "|+")
    with pytest.raises(ValueError):
        gamma(2, "|-")
    with pytest.raises(ValueError):
        RealMapParams.of(1.0)


def test_real_map_params():
    p = RealMapParams.of(-6)
    assert (p.alpha, p.beta) == (pytest.approx(-2), pytest.approx(3))
    assert p.rho == pytest.approx((1 + math.sqrt(25)) / 2)


def test_gamma_examples():
    assert gamma(2, "|+") == pytest.approx(-2, abs=1e-12)
    assert gamma(2, "+-|+") == pytest.approx(-5 - math.sqrt(5), abs=1e-10)
    assert gamma(2, "+-|+") == pytest.approx(c_minus(2), abs=1e-10)
    assert c_plus(2) == -2
    c = gamma(3, "+|-")
    assert abs(zeta("+|-", c) - 3) <= 1e-9
    _, ivs = real_roots_in_interval(difference_poly(3, 1, 2), c_minus(3) - 1e-9, c_plus(3))
    assert any(lo - 1e-9 <= c <= hi + 1e-9 for lo, hi in ivs)
    assert gamma(-2, "-|+") == gamma(2, "+|+")


def test_gamma_high_precision():
    with gmpy2.context(gmpy2.get_context(), precision=220):
        exact = -5 - gmpy2.sqrt(gmpy2.mpfr(5))
    got = gamma(2, "+-|+", prec=200)
    assert abs(got - exact) < gmpy2.mpfr(2) ** -180


def test_psi_high_precision_matches_cosine():
    for s in ("++-|+-", "-+|--+", "|+--"):
        seq = SignSequence.parse(s)
        hi = psi(-2, seq, prec=160, closed_form=False)
        exact = psi_minus2(seq, prec=160)[1]
        assert abs(hi - exact) < gmpy2.mpfr(2) ** -130


def test_long_words_are_handled_in_extended_precision():
    seq = SignSequence((1,) * 6, (1, -1, -1, 1, -1, 1))
    v = psi(-3, seq)
    assert isinstance(v, float) or isinstance(v, type(gmpy2.mpfr()))
    assert conjugacy_residual(-3, seq) < 1e-12


def test_itinerary_and_orbit():
    assert itinerary(-2, 0.0, 4) == [0, -1, 1, 1]
    assert orbit(-2, 0.0, 3) == [0.0, -2.0, 2.0]
    z = psi(-3, "+-|+", prec=100)
    assert [s for s in itinerary(-3, z, 5)] == [1, -1, 1, 1, 1]


@pytest.mark.parametrize("eps", [1, -1])
def test_closed_forms_match_solver(eps):
    for text, fn in closed_forms(eps).items():
        for c in (-2.0, -2.05, -2.7, -4.4, -9.0):
            assert psi(c, text) == pytest.approx(fn(c), abs=1e-9)


@settings(max_examples=60, deadline=None)
@given(params, st.sampled_from(enumerate_sequences(2, 2) + enumerate_sequences(1, 3)))
def test_range_containment(c, seq):
    v = psi(c, seq)
    pars = RealMapParams.of(c)
    inner = math.sqrt(max(-pars.beta - c, 0.0))
    assert -pars.beta - 1e-12 <= v <= pars.beta + 1e-12
    assert inner - 1e-9 <= seq[0] * v <= pars.beta + 1e-9


@settings(max_examples=60, deadline=None)
@given(params, st.sampled_from(enumerate_sequences(2, 3)))
def test_conjugacy_property(c, seq):
    assert conjugacy_residual(c, seq) <= 1e-9 * max(1.0, RealMapParams.of(c).beta)


@settings(max_examples=30, deadline=None)
@given(st.integers(2, 6), st.sampled_from(enumerate_sequences(1, 2, first_sign=1)))
def test_gamma_solves_zeta_equation(a, seq):
    c = gamma(a, seq)
    assert c_minus(a) - 1e-9 <= c <= c_plus(a) + 1e-9
    assert abs(zeta(seq, c) - a) <= 1e-6
    # symmetric under a -> -a with every sign flipped on the first symbol only
    flipped = SignSequence((-seq[0],) + seq.prefix[1:], seq.cycle) if seq.k else None
    if flipped is not None:
        assert gamma(-a, flipped) == pytest.approx(c, abs=1e-9)


def test_mp_backend_reentrant():
    # nested scopes on the same backend must not disturb each other
    with coding._arith(100).scope():
        x = psi(-2.5, "+-|-", prec=100)
        y = psi(-2.5, "+-|-", prec=100)
    assert x == y


def test_no_bracket_is_reported(monkeypatch):
    monkeypatch.setattr(coding, "_compose", lambda ar, c, word, z, beta: z + 1)
    coding._fixed_point_cached.cache_clear()
    with pytest.raises(CodingError):
        coding._fixed_point_solve(coding._arith(53), -3.0, (1, -1), 53, 1e-12)
