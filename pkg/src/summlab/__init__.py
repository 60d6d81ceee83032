"""Numerical laboratory for matrix summability methods on function spaces.

Coefficient sequences, Cesaro and Wiener-algebra summation matrices with
their explicit left inverses, circle/disk norm evaluators, de
Branges-Rovnyak norm ladders, and the classical weak-vs-norm
counterexamples, wired together by a report-emitting CLI.
"""

from .counterexamples import remark_example
from .hb import (
    HbSpace,
    hb_from_phi,
    hb_kernel0_norm,
    outer_from_log_modulus,
    phi_expsqrt,
    phi_geometric,
    phi_growth_profile,
    pythag_complement,
)
from .operators import (
    adjoint_apply,
    apply_row,
    coefficient_pairing,
    convergence_study,
    dirichlet_kernel,
    fejer_kernel,
)
from .report import Report
from .series import (
    CoeffSeq,
    binomial,
    cauchy_product,
    evaluate,
    fourier,
    series_exp,
    series_powhalf_ratio,
    series_recip,
    taylor,
)
from .spaces import (
    CircleGrid,
    bergman_norm,
    bloch_norm,
    hardy_norm,
    l1_norm,
    lp_norm,
    projection_norm,
    sup_norm,
)
from .summatrix import (
    CesaroMatrix,
    DenseMatrix,
    InverseMatrix,
    SummMatrix,
    WienerMatrix,
    cesaro_entry,
    cesaro_row,
    identity_matrix,
    left_inverse_residual,
    limitation_ratio,
    wiener_left_inverse,
    wiener_matrix,
)

__version__ = "0.1.0"
