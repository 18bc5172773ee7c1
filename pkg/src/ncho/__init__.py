"""2-dim noncommutative quantum harmonic oscillator.

Seiberg-Witten map construction, exact and numerically integrated
phase-space dynamics, non-stationary sector energies (the time-crystal
signature), and Wigner eigenfunction evaluation.
"""

__version__ = "0.1.0"

from .core import (  # noqa: F401
    ConstraintReport,
    Frequencies,
    NCParams,
    PhasePoint,
    SWMap,
    constraint_residuals,
    frequencies,
    solve_sw,
    sw_forward,
    sw_inverse,
    validate,
)
from .dynamics import (  # noqa: F401
    EnergyPair,
    InitialAmplitudes,
    State4,
    beat_energy,
    canonical_amplitudes,
    eom_rhs,
    evolve_closed,
    integrate_oracle,
    invariants,
    sector_energy_closed,
    sector_energy_direct,
    sector_energy_linearized,
    sector_energy_special,
    sector_power,
    sector_power_linearized,
)
from .errors import (  # noqa: F401
    ConsistencyFailure,
    DegenerateDeformation,
    DomainError,
    NCError,
    NonPositivePhysical,
    PreconditionError,
    StepCountTooSmall,
    UnknownFigure,
)
from .figures import gamma_ratio_params  # noqa: F401
from .wigner import (  # noqa: F401
    Field2D,
    GridSpec,
    ModeIndex,
    laguerre,
    laguerre_assoc,
    nc_wigner_2d,
    sk_difference_grid,
    spectrum,
    wigner_sector,
    wigner_sector_derivative,
    wigner_sector_time_derivative,
)
