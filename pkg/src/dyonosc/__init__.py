"""Oscillator / charge-dyon duality toolkit.

Coordinate maps in dimensions 1, 2, 4, 8; the induced spectra, degeneracies
and wavefunctions on both sides of the duality; monopole gauge fields; and
a finite-difference eigenvalue oracle that certifies every closed form.
"""

from .errors import (
    ConvergenceError,
    DegenerateFiberError,
    DomainError,
    DyonOscError,
    InvalidParameterError,
    InvalidQuantumNumbersError,
    NoBoundStateError,
    QuantizationError,
    SingularityError,
    UnsupportedDimensionError,
)
from .fields import (
    MagneticCharge,
    circulation,
    dirac_charge,
    dirac_potential,
    goldhaber_term,
    vortex_potential,
    yang_potentials,
)
from .oracle import (
    EigenResult,
    RadialProblem,
    ResidualReport,
    coulomb_rmax,
    harmonic_rmax,
    residual,
    solve_angular_theta,
    solve_radial,
    sturm_lowest,
)
from .specfun import (
    HalfInt,
    clebsch_gordan,
    gauss2f1_terminating,
    hermite,
    kummer_terminating,
    log_gamma,
    wigner_small_d,
)
from .spectra import (
    DualMap,
    PhysicalParams,
    SpectrumLine,
    SystemId,
    dual_params,
    duality_identity_residual,
    dyon_energy,
    enumerate_spectrum,
    osc_degeneracy,
    osc_energy,
    principal_quantity,
    quantized_frequencies,
    ycm_degeneracy,
    ycm_degeneracy_sum_check,
)
from .transforms import (
    DyonPoint,
    FiberAngles,
    OscPoint,
    euler_residual,
    fiber_angles,
    forward_map,
    hurwitz_matrix,
    ks_point_from_angles,
    zero_rows_residual,
)
from .wavefun import (
    anyon_wavefn,
    dyon2_wavefn,
    dyon3_wavefn,
    normalization,
    osc1_wavefn,
    osc2_wavefn,
    osc4_wavefn,
    ycm_angular_Z,
    ycm_radial_R,
)

__version__ = "0.1.0"
