"""Spanier-Whitehead K-duality on graded K-theory, computed exactly."""

from .intlin import IntMatrix, SnfResult, snf, kernel_basis, cokernel
from .fgab import (
    FgAbGroup, GroupHom, InvalidHomomorphism, canonicalize, direct_sum, hom, ext, tensor,
    tor, is_isomorphic, induced_ext_map, induced_ext_map_covariant,
)
from .kkobj import (
    GradedGroup, Parity, Construction, UNIT, dual, suspend, kunneth, kk_group, modp_k,
    pairing_into_unit_is_trivial,
)
from .ringmodel import EndoRingElement, NotInvertible, multiply, gamma_infinity, try_invert
from .limits import DirectSystem, DualVerdict, Unbounded, colimit_is_fg, dual_verdict
from .builders import sphere, moore, torus, cuntz_krieger, ck_duality_check
from .expr import ParseError, parse_group, parse_graded, format_group, format_graded

__version__ = "0.1.0"
