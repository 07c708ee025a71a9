"""Exact Jacquet-module computations for split SO(2n+1) and Sp(2n).

The package computes, in closed form over the rationals, semisimplified
Jacquet modules of irreducible representations with tempered good-parity or
generic parameters: the degree-one functors, their iterates, the isotypic
and full Jacquet coproducts, packet enumeration, genericity tests via
adjoint L-factor combinatorics, and irreducibility of small standard
modules.  Everything is symbolic; no group element is ever represented.
"""

from .algebra import (FormalSum, HalfInt, Rational, SingularMatrixError, half,
                      invert_triangular, parse_half)
from .segments import (GLLabel, RhoKey, Segment, SelfDualType, big_mstar,
                       contragredient, gl_jacquet_delta, jac_dim, mstar_gl,
                       normalize_multisegment, segment_from_run, steinberg)
from .parameters import (BadParityError, GroupType, Parameter, Summand,
                         UnknownRhoError, build_parameter,
                         decompose_tempered_induction, is_good_parity,
                         is_nonzero, list_packet)
from .lattice import (StandardLabel, TemperedLabel, VirtualGRep, attach,
                      induct_segment, normalize_standard, tempered_sum)
from .functors import jac_rho_x, jac_vector
from .coproduct import (JacMatrix, NonGenericStandardError, jac_P_k,
                        jac_matrix, k_sets, mu_star_full, mu_star_rho, x_of_k)
from .lfactors import (HypothesisViolationError, StdModuleReport, TwistedParam,
                       Verdict, ZetaExponents, adjoint_constituents, is_generic,
                       small_standard_composition, std_irreducible,
                       twisted_param_of, zeta_exponents)

__all__ = [name for name in dir() if not name.startswith("_")]
