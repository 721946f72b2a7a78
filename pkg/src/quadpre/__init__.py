"""Preperiodic parameters of ``z**2 + c``: exact polynomials, certified roots,
real symbolic dynamics for ``c <= -2`` and a bounded-depth verifier for
simultaneously preperiodic integer pairs."""

from .coding import RealMapParams, fixed_point, g_branch, gamma, psi, zeta
from .paramsets import (IntersectionReport, ParamSetReport, R_bound, intersect,
                        is_preperiodic_exact, param_set, point_set)
from .poly import (DegreeCapExceeded, IntPolynomial, ResourceLimit, difference_poly,
                   eval_poly, iterate_poly, telescoping_identity_check)
from .roots import (CertificationError, RootSet, complex_roots,
                    conjugates_in_halfopen_interval, integer_roots, isolate_roots,
                    real_roots_in_interval)
from .symdyn import (SignSequence, canonicalize, collides_at_minus2, count_X_minus2,
                     delta_sequence, enumerate_sequences, psi_minus2, shift)

__version__ = "0.1.0"
