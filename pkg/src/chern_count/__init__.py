"""Exact universal formulas for curves on a surface with one singular point,
or with a node plus one more singular point, of codimension at most 7."""
from .chern_ring import FormalPolynomial, OnePointClass, SurfaceGeometry, TwoPointClass, format_polynomial
from .strata import DEFAULT_VARIANTS, OnePointEngine, StratumKey, StratumTag, Variants, n_singularity
from .surfaces import count, expected_point_count, p1_x_p1, projective_plane
from .two_point import TwoPointEngine, TwoPointKey, TwoPointTag, n_pair

__version__ = "0.1.0"
