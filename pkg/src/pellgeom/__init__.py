"""Exact bisectors, simplex incenters, triangle centers and Pell-like equations
over Q and real quadratic fields Q(sqrt m)."""
from .errors import BoundExceeded, DomainError, FactorizationIncomplete, FieldMismatch
from .exactfield import (
    Field,
    Q,
    Scalar,
    SquareClass,
    canonical_rep,
    is_square_in_k,
    norm_conj,
    ord_p,
    parse_field,
    parse_scalar,
    sqrt_in_k,
    sqrt_ratio,
    square_class_equiv,
    squarefree_part,
)
from .pell import QuadCtx, fundamental_unit, pell_like_families, pell_solve, solvable
from .simplex import Simplex, incenter, incenter_report, volume
from .triangle import Triangle, centers, construct

__version__ = "0.1.0"
