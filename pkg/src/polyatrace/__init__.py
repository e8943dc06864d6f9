"""Exact Lefschetz series on invariants of graded tensor powers.

Cycle-index formulas for traces on ``(V^{(x)n})^G``, a brute-force Koszul-sign
oracle that checks them, and the enumerative consequences: Betti and Hodge
numbers of symmetric and alternating powers, Polya counts, zeta series and
point counts of quotients over finite fields.
"""

from .enumeration import (CountVector, alt_zeta_from_counts, burnside_orbit_count, orbit_census,
                          polya_count, polya_weight_poly, quotient_point_count, zeta_from_counts)
from .errors import CapExceededError, OracleMismatchError
from .fields import (DiscriminantCensus, ExtensionField, PrimeField, brute_force_affine_counts,
                     discriminant_census, discriminant_poly, quadratic_character)
from .formulas import (RationalGF, alt_cheah_hodge_series, alt_generating_function,
                       alt_generating_function_det, alt_generating_function_raw, cheah_hodge_series,
                       conjugacy_trace_formula, hodge_quotient, invariant_lefschetz_formula,
                       quotient_poincare, sym_generating_function)
from .graded import (GradedMap, GradedSpace, betti_to_identity_map, graded_power, hodge_to_map,
                     lefschetz, lefschetz_at)
from .kunneth import (act, invariant_lefschetz_oracle, oracle_trace, q_form, representation_check)
from .matrix import SquareMatrix, det_one_minus_tA, determinant
from .perms import (PermGroup, Permutation, alternating_cycle_index, alternating_series_identity_check,
                    compose, cycle_index, cycle_index_series_symmetric, cycle_type, group_closure,
                    named_group)
from .poly import MultiPoly, format_rational, parse_poly
from .series import TruncatedSeries

__version__ = "0.1.0"
