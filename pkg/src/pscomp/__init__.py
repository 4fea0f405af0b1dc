"""Composition integrators with complex time steps and real-axis projection.

Building blocks:

- :mod:`pscomp.coefficients` -- complex composition coefficients.
- :mod:`pscomp.composition` -- schedules, conjugate-pair double jumps,
  real-axis projection, and the recursive family construction.
- :mod:`pscomp.problems` -- harmonic oscillator, Kepler, a semi-linear
  reaction-diffusion equation, and the complex Ginzburg-Landau equation
  as exact or split flows, plus a fourth-order complex splitting.
- :mod:`pscomp.spectral` -- periodic grid, DFT pair, diagonal propagators.
- :mod:`pscomp.diagnostics` -- convergence, defect, and truncation fits.
- :mod:`pscomp.bench` -- named experiment presets with CSV/JSON output.
"""

from .coefficients import (
    gamma_double_jump, gamma_smallest_phase, gamma_triple_jump,
    order_condition_residuals,
)
from .composition import (
    CompositionSchedule, RecursiveFamily, coefficient_arguments,
    compose_schedule, double_jump, real_projection, recursive_family,
)
from .complexlog import analytic_inv_r3, principal_log
from .errors import DomainError, SingularityError, ValidationError
from .flowmap import EXACT_META, INFINITE_ORDER, FlowMap, MethodMeta, identity_flow
from .spectral import (
    SpectralField, SpectralGrid, dft, diffusion_propagator, idft,
    sup_norm_distance, write_snapshot,
)

__version__ = "0.1.0"

__all__ = [
    "CompositionSchedule", "DomainError", "EXACT_META", "FlowMap",
    "INFINITE_ORDER", "MethodMeta", "RecursiveFamily", "SingularityError",
    "SpectralField", "SpectralGrid", "ValidationError",
    "analytic_inv_r3", "coefficient_arguments", "compose_schedule",
    "dft", "diffusion_propagator", "double_jump", "gamma_double_jump",
    "gamma_smallest_phase", "gamma_triple_jump", "identity_flow", "idft",
    "order_condition_residuals", "principal_log", "real_projection",
    "recursive_family", "sup_norm_distance", "write_snapshot",
]
