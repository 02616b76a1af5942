"""Exact computation in Weyl and affine Weyl groups: the Demazure monoid,
the nil-Hecke action on twisted involutions, and the maps pi, ^J pi, pi'."""

from .affine import AffineContext, build_affine_context, table_rows
from .coxeter import (
    CoxeterError,
    Element,
    Group,
    GroupMismatchError,
    Star,
    apply_star,
    build_group,
    build_star,
    canonical_word,
    format_word,
    from_word,
    inverse,
    left_descents,
    length,
    multiply,
    parse_word,
    right_descents,
)
from .demazure import demazure_product, is_final_segment, is_initial_segment
from .hecke import HeckeModule, UPoly, h_mul_Ts, nil_product, specialize_u0
from .involutions import NilHeckeModule, Signed, is_twisted_involution, module_for, pi
from .parabolic import ParabolicContext, longest_element

__version__ = "0.1.0"
