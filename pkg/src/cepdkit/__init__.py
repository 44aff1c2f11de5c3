"""Generalized inverses of dense complex matrices.

Moore-Penrose, group, Drazin, core EP, DMP, MPD, CMP and Drazin-star
inverses; index, Hartwig-Spindelboeck and core-nilpotent decompositions;
matrix-class tests (EP, k-EP, SD, partial isometry, CEPD); and linear-system
solvers built on these inverses.
"""

from .classify import (
    ClassificationReport,
    CepdEquivalenceReport,
    cepd_equivalences,
    check_cepd_theorems,
    check_pi_theorems,
    classify,
    is_cepd,
    is_partial_isometry,
)
from .decomp import CoreNilpotentParts, HsDecomposition, SvdResult, core_nilpotent, hs_decompose, svd
from .errors import *  # noqa: F401,F403
from .identities import IdentityReport, IdentityRow, verify_identities
from .inverses import (
    InverseBundle,
    cmp,
    core_ep,
    defining_residuals,
    dmp,
    drazin,
    drazin_star,
    group_inverse,
    index,
    inverse_bundle,
    moore_penrose,
    mpd,
)
from .matrix import DEFAULT_TOL, Tolerance, approx_eq, as_matrix, conj_transpose, matrix_power, rank
from .randgen import GenSpec, gen_cepd, gen_partial_isometry, gen_power_partial_isometry, gen_with_index
from .solvers import (
    SolveResult,
    solve_cmp_system,
    solve_drazin_star,
    solve_drazin_system,
    solve_in_corange,
    solve_pi,
)

__version__ = "0.1.0"
