"""Deformed oscillator toolkit.

Deformed integers and exponentials, braided wedge products, noncommutative
differential calculus, truncated ladder representations, coherent states
with grid resolutions of unity, interpolating mode statistics, and an exact
nilpotent-variable sector, with a CLI that re-runs every identity check.
"""

from .errors import (
    QonkitError,
    DegenerateParameterError,
    DivergenceError,
    TruncationError,
    NonConvergenceError,
    SingularPointError,
    AssociativityError,
    ConventionError,
    UnsolvableResolutionError,
)
from .qcalc import (
    Scheme,
    QParams,
    qnumber,
    qfactorial,
    convergence_radius,
    qexp,
    qexp_terms,
    qexp_product,
    qexp_reciprocal,
    qderivative,
    jackson_integral,
    jackson_exp_moment,
)
from .braid import (
    DeformationMatrix,
    SymmetryMatrix,
    WedgeConvention,
    permutation_matrix,
    multiparametric_deformation,
    multiparametric_symmetry,
    reciprocal_phase_matrix,
    lift,
    braid_residual,
    ybe_residual,
    wedge_symmetry_residual,
    wedge_operator,
    inversions,
    permutation_operator,
    q_symmetrizer,
    deformed_wedge,
    wedge_append,
    wedge_prepend,
    wedge_space_dimension,
    two_particle_wavefunction,
)
from .ncforms import (
    CoordinateAlgebra,
    NCPolynomial,
    NCForm,
    normal_order,
    generators,
    derivative,
    exterior_derivative,
)
from .fock import FockRep, build_rep, verify_algebra, nilpotency_residual
from .coherent import (
    CoherentState,
    build_cs,
    eigenstate_residual,
    overlap,
    overlap_series,
    resolution_check_jackson,
    jackson_atoms,
    weight_moment_check,
    weight_series,
)
from .quonstat import (
    ModeSpec,
    FiniteSumResult,
    SeriesResult,
    partition_mode,
    occupation,
    occupation_finite_sum,
    occupation_series,
    gas_scan,
)
from .graded import (
    CyclotomicScalar,
    GradedAlgebra,
    GradedElement,
    KetElement,
    BraElement,
    coherent_ket,
    coherent_bra,
    generator_ket,
    apply_raising,
    apply_lowering,
    left_multiply_variable,
    pairing,
    outer_product,
    integrate,
    double_integrate,
    graded_overlap,
    graded_resolution,
    supercoherent,
    supercoherent_displaced,
    z3_cyclic_canonical,
    z3_word_product,
    OverlapResult,
    ResolutionResult,
    SuperCoherentState,
)
from .acceptance import CheckResult, run_all

__version__ = "0.1.0"
