"""Sharp bounds for coefficient sums of polynomials bounded on the unit disk."""

from .enestrom_kakeya import (
    EKHypothesisError,
    EKProfile,
    SingularPointError,
    cauchy_coefficient_bound,
    decay_envelope,
    ek_annulus_check,
    ek_envelope_inner,
    ek_envelope_outer,
    ek_profile,
    pole_distance_bound,
)
from .experiments import (
    GridCell,
    classify,
    cor22_degree,
    fig2_table,
    figure1_grid,
    improved_set,
    thm21_convergence,
)
from .functional_bounds import (
    BoundCertificate,
    WeightVector,
    bound_minus,
    bound_plus,
    combined_bound,
    cute_inequality_check,
    cute_witness,
    newman_bound,
    shapiro_C,
)
from .interpolation import (
    EvalFunctional,
    RootSet,
    Sign,
    extremal_witness,
    functional_norm,
    lagrange,
    partition_check,
    root_set,
    solve_weights,
)
from .landau import (
    LandauBound,
    NearExtremal,
    TaylorTable,
    binom_half,
    landau_bound,
    near_extremal,
    p_n,
    taylor_f_n,
)
from .polykernel import Polynomial, series_invert, sup_norm_circle
from .rootfind import ConvergenceError, RootReport, find_roots, r_of_n, root_bound_report

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
