import json
import math

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from quadpre.coding import c_minus
from quadpre.paramsets import (R_bound, adjacent_family_check, genexv_family_check, intersect,
                               is_preperiodic_exact, nonstabilization_check, nonstabilization_counts,
                               orbit_status, param_set, point_set, point_set_is_symmetric,
                               root_multiplicity, theorem_prediction)
from quadpre.poly import difference_poly
from quadpre.roots import distinct_root_count

C = sympy.Symbol("c")


def to_sympy(p):
    return sympy.Poly(list(reversed(p.coeffs)), C)


def test_param_set_examples():
    assert set(param_set(1, 1, 2).integer_values()) == {-3, -2, -1, 0}
    assert param_set(0, 0, 1).integer_values() == {0}
    # D = c^3 (c + 2): only -2 and 0
    assert param_set(0, 2, 1).integer_values() == {-2, 0}
    assert param_set(2, 1, 1).integer_values() == {-6, -2}
    rep = param_set(2, 2, 1)
    reals = rep.real_values()
    assert len(reals) == 4
    assert min(reals) == pytest.approx(-5 - math.sqrt(5), abs=1e-9)
    assert all("coding-confirmed" in e["kind"] for e in rep.elements)


def test_param_set_complex_elements_within_disk():
    rep = param_set(0, 0, 3)
    assert len(rep.elements) == 4
    assert rep.within_disk
    assert any(isinstance(e["value"], complex) for e in rep.elements)
    nonzero = [p for p in sympy.Poly(to_sympy(difference_poly(0, 0, 3)).as_expr(), C).nroots()]
    assert sorted(abs(complex(z)) for z in nonzero) == pytest.approx(
        sorted(abs(complex(e["value"])) for e in rep.elements for _ in range(e["mult"])), abs=1e-9)


def test_param_set_serializes():
    d = param_set(1, 1, 2).to_dict()
    json.dumps(d)
    assert d["distinct_count"] == 4


def test_point_set_examples():
    rs = point_set(-2, 0, 1)
    assert sorted(r for r, _ in rs.exact_integer_roots) == [-1, 2]
    rs = point_set(-2, 1, 1)
    assert rs.distinct_count == 4
    assert sorted(r for r, _ in rs.exact_integer_roots) == [-2, -1, 1, 2]
    rs = point_set(0, 0, 2)
    assert rs.distinct_count == 4
    assert sorted(r for r, _ in rs.exact_integer_roots) == [0, 1]
    for z in rs.nonreal_values():
        assert abs(z ** 3 - 1) < 1e-9


@pytest.mark.parametrize("c", [-2, -1, 0, 3, sympy.Rational(-7, 4)])
def test_point_set_symmetry(c):
    from fractions import Fraction
    c = Fraction(str(c))
    assert point_set_is_symmetric(c, 1, 2)
    assert point_set_is_symmetric(c, 2, 1)
    assert not point_set_is_symmetric(c, 0, 1)


def test_is_preperiodic_examples():
    assert is_preperiodic_exact(-2, 0) == (2, 1)
    assert is_preperiodic_exact(-1, 1) == (1, 2)
    assert is_preperiodic_exact(1, 0) is None
    assert orbit_status(1, 0)[0] == "escaped"
    assert orbit_status(-1, 0) == ("preperiodic", 0, 2)


def test_intersect_examples():
    assert intersect(1, 2).values() == {-3, -2}
    assert intersect(0, 2).values() == {-2}
    r = intersect(0, 3)
    assert r.values() == set() and r.complete
    assert intersect(2, 3).values() == {-7, -6}
    r = intersect(0, 5, 4, 4)
    assert r.values() == set() and r.complete and r.gcd_certified
    assert not intersect(0, 1).complete


def test_intersect_small_depth_matches_exact_gcd():
    # at small depth compare with an exact gcd of the full polynomials
    for a, b in [(0, 1), (1, 2), (0, 2), (1, 3)]:
        rep = intersect(a, b, 2, 2)
        common = set()
        for p in (1, 2):
            for q in (1, 2):
                g = sympy.gcd(to_sympy(difference_poly(a, 2, p)).as_expr(),
                              to_sympy(difference_poly(b, 2, q)).as_expr())
                common |= {complex(r) for r in sympy.Poly(g, C).all_roots()} if sympy.degree(g, C) > 0 else set()
        ints = {int(round(z.real)) for z in common if abs(z - round(z.real)) < 1e-9}
        assert rep.values() == ints
        assert len(common) == len(ints) + len(rep.algebraic_common)


def test_intersect_rejects_equal_magnitude():
    with pytest.raises(ValueError):
        intersect(3, -3)


def test_report_serializes():
    json.dumps(intersect(1, 2, 3, 3).to_dict())


def test_theorem_prediction():
    assert theorem_prediction(0, 1) == {-2, -1, 0}
    assert theorem_prediction(-3, 4) == {-13, -12}
    assert theorem_prediction(1, 4) == set()
    assert theorem_prediction(2, -2) is None


@pytest.mark.parametrize("a", [0, 1, 5, -3])
def test_adjacent_families(a):
    assert adjacent_family_check(a)
    assert genexv_family_check is adjacent_family_check


def test_nonstabilization():
    assert nonstabilization_counts(0, 5) == [1, 1, 2, 5, 12, 27]
    assert nonstabilization_check(0, 4)
    assert nonstabilization_check(1, 4)
    assert nonstabilization_check(3, 3)


@pytest.mark.parametrize("a", [2, 3, 4, 5, 6])
def test_radius_identity(a):
    assert R_bound(a) == pytest.approx(-c_minus(a), abs=1e-12)


@settings(max_examples=40, deadline=None)
@given(st.integers(-4, 4), st.integers(0, 3), st.integers(1, 3), st.integers(-8, 2))
def test_root_multiplicity_matches_integer_roots(a, k, p, c0):
    D = difference_poly(a, k, p)
    mult = dict(sympy.roots(to_sympy(D).as_expr(), C))
    assert root_multiplicity(a, k, p, c0) == mult.get(sympy.Integer(c0), 0)


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 5), st.integers(1, 3), st.integers(1, 3))
def test_parameter_sets_even_in_a(a, k, p):
    assert difference_poly(a, k, p) == difference_poly(-a, k, p)
    assert distinct_root_count(difference_poly(a, k, p)) == len(param_set(-a, k, p, cross_check=False).elements)
