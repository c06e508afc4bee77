"""Exact classifier and explorer for stable non-commutative curves on the
stability manifold of the acyclic triangular quiver."""

from .angles import (
    OPEN_CLOSED,
    OPEN_OPEN,
    CLOSED_OPEN,
    OutsideWindow,
    Phase,
    SheetMismatch,
    arg_in_window,
    halfplane_side,
    phase_add_int,
    phase_compare,
    phase_from_charge,
)
from .chambers import ChamberLocation, locate, walk
from .classifier import (
    SearchBudget,
    classify,
    find_N_u,
    find_transfer_index,
    semistable,
)
from .gaussian import GaussianRational, Rational, cross, dot, gr
from .oracle import (
    CapExceeded,
    MatrixRep,
    cross_check,
    heart_point,
    king_phase,
    king_semistable,
    rep_of,
    subrep_dim_vectors,
)
from .quiver import (
    DELTA,
    DerivedPoint,
    ExcObject,
    HomProfile,
    KClass,
    M,
    MP,
    NCCurve,
    a,
    alpha,
    b,
    beta,
    class_of,
    euler_form,
    hom_profile,
    parse_object,
    zeta,
    zeta_curve,
    zeta_point as zeta_derived_point,
)
from .stability import (
    CentralCharge,
    ChartId,
    ChartViolation,
    StabilityPoint,
    chart_t,
    charge_of,
    make_point,
    reexpress,
    zeta_point,
)
from .symbolic import Classification, CurveSet, DerivedSet, IndexSet

__version__ = "0.1.0"
