"""Certified polynomial rootfinding: Laguerre's iteration with SPA seeding."""
from .errors import (
    DegenerateSums,
    DegreeTooLow,
    EmptyRootList,
    LaspaError,
    LeadingCoefficientZero,
    NotASimpleRoot,
    ParseError,
    PoleAtRoot,
    RootAtShiftPoint,
    SeedingFailed,
    SingularStep,
    ZeroLeadingCoefficient,
)
from .laguerre import (
    ConvergenceDisk,
    IterationOptions,
    IterationTrace,
    StopReason,
    a_priori_radius_bound,
    convergence_radius,
    iterate_to_root,
    laguerre_step,
    radius_factor,
    root_separation_bound,
)
from .polynomial import (
    EvalTriple,
    Polynomial,
    PowerSums,
    deflate,
    eval_triple,
    from_roots,
    reciprocal_power_sums,
    taylor_shift,
)
from .roots_iteration import RootSet, SumPair, laguerre_step_from_roots, sums_at
from .solver import RootEstimate, SolveConfig, certify_root, find_all_roots
from .spa import SpaOptions, nearest_root_estimate, shifted_power_sums, spa_seed
from .viz import (
    BasinImage,
    BasinPixel,
    RasterConfig,
    basin_stats,
    colorize,
    iterate_pixel,
    pixel_grid,
    render_basins,
    write_ppm,
)

__version__ = "0.1.0"
