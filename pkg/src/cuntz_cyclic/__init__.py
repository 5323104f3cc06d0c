"""Exact chain-level computations for cyclic cohomology of the Cuntz semigroup algebra.

Scalars are ``int``/``Fraction``; chains are ``LinComb`` objects keyed by
tuples of monomials.
"""

from .algebra import LinComb, pi_multiply
from .chains import (
    boundary,
    chain,
    cyclic_equiv,
    cyclic_norm,
    cyclic_shift,
    degree,
    face_map,
    transition_profile,
)
from .cochains import (
    Cochain,
    TracePair,
    cobound_normalized,
    coboundary,
    invariant_project,
    one_normalize,
    symmetrize_cochain,
    trace_cuntz,
    trace_free,
    trace_from_pair,
    trace_power,
)
from .homotopy import (
    LONG_CUNTZ,
    LONG_FREE,
    SIMPLE_CUNTZ,
    P_apply,
    P_terms,
    SplitSpec,
    phi_apply,
    phi_homotopy,
    r_apply,
    rho_long_cuntz,
    rho_long_free,
    rho_simple,
    s_apply,
)
from .notation import ParseError, format_lincomb, parse_chain
from .semigroup import CUNTZ_UNIT, FREE_UNIT, CuntzMonomial, FreeWord, p, pq, q, w

__version__ = "0.1.0"

__all__ = [
    "CUNTZ_UNIT",
    "Cochain",
    "CuntzMonomial",
    "FREE_UNIT",
    "FreeWord",
    "LONG_CUNTZ",
    "LONG_FREE",
    "LinComb",
    "P_apply",
    "P_terms",
    "ParseError",
    "SIMPLE_CUNTZ",
    "SplitSpec",
    "TracePair",
    "boundary",
    "chain",
    "cobound_normalized",
    "coboundary",
    "cyclic_equiv",
    "cyclic_norm",
    "cyclic_shift",
    "degree",
    "face_map",
    "format_lincomb",
    "invariant_project",
    "one_normalize",
    "p",
    "parse_chain",
    "phi_apply",
    "phi_homotopy",
    "pi_multiply",
    "pq",
    "q",
    "r_apply",
    "rho_long_cuntz",
    "rho_long_free",
    "rho_simple",
    "s_apply",
    "symmetrize_cochain",
    "trace_cuntz",
    "trace_free",
    "trace_from_pair",
    "trace_power",
    "transition_profile",
    "w",
]
