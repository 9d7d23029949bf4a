"""Exact computation of skew dual Grothendieck polynomials.

Four independent routes (tableau enumeration, three determinant families,
a bialternant ratio) plus the 3D lattice-path layer: signed path-system
sums, a sign-reversing involution, and the bijection between good path
systems and reverse plane partitions.
"""

from .shapes import Partition, ShapeError, SkewShape, parse_partition, parse_shape
from .polyring import ExactDivisionError, Poly, exact_divide
from .symfn import SymSpec, complete_sym, elem_sym, gen_binomial, phi_power_h, schur_jt
from .tableaux import (
    EMPTY,
    RPP,
    ReducedFilling,
    complete_filling,
    dual_grothendieck,
    enumerate_rpp,
    reduce_filling,
    rpp_weight,
)
from .detkit import (
    FORMULAS,
    FormulaUsageError,
    PolyMatrix,
    bialternant,
    det,
    g_via,
    h_straight_matrix,
    jt_e_matrix,
    jt_h_dual_matrix,
)
from .lattice3d import (
    CutEdge,
    LatticePath,
    PathSystem,
    WallProjection,
    cut_edge,
    enumerate_paths,
    enumerate_systems,
    from_rpp,
    good_sum,
    good_systems,
    lgv_signed_sum,
    pair_enumerator,
    path_involution,
    project,
    step_slide,
    to_rpp,
    transpose_k,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
