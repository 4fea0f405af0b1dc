"""Semi-linear reaction-diffusion equation u_t = u_xx + u(1 - u) on a
periodic interval, split into the Laplacian flow (diagonal in Fourier
space) and the logistic reaction flow, which has the closed form

    u(t) = u0 e^t / (1 + u0 (e^t - 1)).

This evaluation form has fewer cancellations than the equivalent
``u0 + u0 (1 - u0)(e^t - 1) / (1 + u0 (e^t - 1))``; the equivalence is a
unit test.  The reaction flow is defined for any complex step small enough
that the denominator stays away from zero.
"""

import numpy as np

from ..errors import SingularityError
from ..flowmap import EXACT_META, FlowMap, MethodMeta
from ..spectral import SpectralField, diffusion_propagator

REACTION_DENOMINATOR_FLOOR = 1e-12


def _reaction(values, tau):
    growth = np.exp(tau)
    denom = 1.0 + values * (growth - 1.0)
    bad = np.abs(denom) < REACTION_DENOMINATOR_FLOOR
    if np.any(bad):
        idx = int(np.argmax(bad))
        raise SingularityError(
            f"logistic flow denominator vanished at grid index {idx}",
            index=idx, value=complex(denom[idx]),
        )
    return values * growth / denom


def fisher_reaction_flow(field, tau):
    """Pointwise logistic flow of u' = u(1 - u) over a (complex) step."""
    return SpectralField(field.grid, _reaction(field.values, complex(tau)))


def fisher_reaction_map():
    return FlowMap(_reaction, EXACT_META, name="fisher-reaction")


def fisher_diffusion_map(grid):
    k2 = grid.wavenumbers() ** 2

    def apply(values, tau):
        return np.fft.ifft(np.exp(-tau * k2) * np.fft.fft(values))

    return FlowMap(apply, EXACT_META, name="fisher-diffusion")


STRANG_META = MethodMeta(order=2, pseudo_symmetry_order=np.inf,
                         pseudo_symplecticity_order=np.inf)


def fisher_strang_flow(grid):
    """Splitting diffusion(tau/2), reaction(tau), diffusion(tau/2)."""
    k2 = grid.wavenumbers() ** 2

    def apply(values, tau):
        half = np.exp(-(tau / 2.0) * k2)
        y = np.fft.ifft(half * np.fft.fft(values))
        y = _reaction(y, tau)
        return np.fft.ifft(half * np.fft.fft(y))

    return FlowMap(apply, STRANG_META, name="fisher-strang")


def fisher_diffusion_field(field, tau):
    """Field-level wrapper around the pure-Laplacian propagator."""
    return diffusion_propagator(field, alpha=1.0, eps=0.0, tau=tau)
