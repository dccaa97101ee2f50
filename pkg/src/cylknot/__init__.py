"""cylknot: topology and tangency of infinite straight cylinder configurations."""

from .geometry import (
    Configuration,
    EllipticCylinder,
    OrientedLine,
    chirality_product,
    contact_alpha,
    contact_point,
    direction_vector,
    half_width,
    mirror,
    round_cylinder,
    section_frame,
    signed_tangency_residual,
    tangency_gap,
)
from .invariants import (
    InvariantReport,
    char_poly,
    det_exact,
    dof,
    invariant,
    invariant_n,
    invariant_report,
    is_extreme,
    max_rings,
    q_matrix,
    qn_matrix,
    switch_row_positive,
)
from .matrices import RingMatrix, SeidelMatrix, SpiralityMatrix
from .topomatrix import (
    chirality_matrix,
    chirality_raw,
    enclosing_triangles,
    ring_matrix,
    spirality_matrix,
)

__version__ = "0.1.0"
