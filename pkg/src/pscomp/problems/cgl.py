"""Complex Ginzburg-Landau equation u_t = alpha u_xx + eps u - beta |u|^2 u
with alpha = 1 + i c1 and beta = 1 - i c3, propagated as a real system for
(v, w) = (Re u, Im u) so that complex time steps are legitimate (|u|^2 u is
not holomorphic in u).

A constant linear change of variables diagonalizes both the dispersive and
the cubic coupling:

    vt = (-i v + w) / 2,   wt = (v - i w) / 2,

in which the linear part propagates mode k of vt with
exp(eps t) exp(-t alpha k^2) (conjugate alpha for wt) and the cubic part
has the closed form

    vt(t) = vt0 exp(-(beta/2) log(1 + 2 t m0)),
    wt(t) = wt0 exp(-(conj(beta)/2) log(1 + 2 t m0)),

with m0 = 4i vt0 wt0 (= v0^2 + w0^2) and the principal logarithm, defined
as long as 1 + 2 t m0 avoids the negative real axis.  States are stored as
(2, N) arrays holding the (v, w) rows; the diagonal variables are internal
to each substep.
"""

from dataclasses import dataclass

import numpy as np

from ..complexlog import principal_log
from ..errors import SingularityError, ValidationError
from ..flowmap import EXACT_META, FlowMap, MethodMeta
from ..spectral import SpectralField


@dataclass(frozen=True)
class CGLParams:
    """Real model coefficients; alpha and beta are derived."""

    c1: float
    c3: float
    eps: float

    @property
    def alpha(self):
        return complex(1.0, self.c1)

    @property
    def beta(self):
        return complex(1.0, -self.c3)


@dataclass(frozen=True)
class CGLState:
    """Real and imaginary parts of u as (complexified) spectral fields."""

    v: SpectralField
    w: SpectralField

    def __post_init__(self):
        if self.v.grid != self.w.grid:
            raise ValidationError("v and w must share one grid")

    @property
    def grid(self):
        return self.v.grid

    def as_array(self):
        return np.array([self.v.values, self.w.values])

    @classmethod
    def from_array(cls, values, grid):
        return cls(SpectralField(grid, values[0]), SpectralField(grid, values[1]))

    @classmethod
    def from_complex_field(cls, u, grid):
        u = np.asarray(u, dtype=complex)
        return cls(SpectralField(grid, u.real), SpectralField(grid, u.imag))

    def reconstruct(self):
        """u = v + i w (meaningful when v, w carry real data)."""
        return self.v.values + 1j * self.w.values


def _to_diagonal(vw):
    v, w = vw
    return np.array([0.5 * (-1j * v + w), 0.5 * (v - 1j * w)])


def _from_diagonal(diag):
    dv, dw = diag
    return np.array([1j * dv + dw, dv + 1j * dw])


def _nonlinear(vw, tau, beta):
    diag = _to_diagonal(vw)
    m0 = 4j * diag[0] * diag[1]
    argument = 1.0 + 2.0 * tau * m0
    on_cut = (argument.imag == 0.0) & (argument.real <= 0.0)
    if np.any(on_cut):
        idx = int(np.argmax(on_cut))
        raise SingularityError(
            "cubic flow hit the logarithm branch cut at grid index "
            f"{idx}: 1 + 2 tau m0 = {complex(argument[idx])}",
            index=idx, value=complex(argument[idx]),
        )
    log_term = principal_log(argument)
    diag[0] = diag[0] * np.exp(-0.5 * beta * log_term)
    diag[1] = diag[1] * np.exp(-0.5 * np.conj(beta) * log_term)
    return _from_diagonal(diag)


def _linear(vw, tau, alpha, eps, k2):
    diag = _to_diagonal(vw)
    gain = np.exp(eps * tau)
    diag[0] = np.fft.ifft(gain * np.exp(-tau * alpha * k2) * np.fft.fft(diag[0]))
    diag[1] = np.fft.ifft(gain * np.exp(-tau * np.conj(alpha) * k2) * np.fft.fft(diag[1]))
    return _from_diagonal(diag)


def cgl_nonlinear_flow(state, params, tau):
    """Closed-form flow of the cubic part over a (complex) step."""
    out = _nonlinear(state.as_array(), complex(tau), params.beta)
    return CGLState.from_array(out, state.grid)


def cgl_linear_flow(state, params, tau, grid=None):
    """Exact flow of the dispersive/gain part over a (complex) step."""
    grid = grid if grid is not None else state.grid
    k2 = grid.wavenumbers() ** 2
    out = _linear(state.as_array(), complex(tau), params.alpha, params.eps, k2)
    return CGLState.from_array(out, grid)


def cgl_nonlinear_map(params):
    beta = params.beta

    def apply(vw, tau):
        return _nonlinear(vw, tau, beta)

    return FlowMap(apply, EXACT_META, name="cgl-nonlinear")


def cgl_linear_map(params, grid):
    alpha, eps = params.alpha, params.eps
    k2 = grid.wavenumbers() ** 2

    def apply(vw, tau):
        return _linear(vw, tau, alpha, eps, k2)

    return FlowMap(apply, EXACT_META, name="cgl-linear")


STRANG_META = MethodMeta(order=2, pseudo_symmetry_order=np.inf,
                         pseudo_symplecticity_order=np.inf)


def cgl_strang_flow(params, grid):
    """Splitting linear(tau/2), cubic(tau), linear(tau/2) on (v, w) arrays."""
    alpha, beta, eps = params.alpha, params.beta, params.eps
    k2 = grid.wavenumbers() ** 2

    def apply(vw, tau):
        half = tau / 2.0
        y = _linear(vw, half, alpha, eps, k2)
        y = _nonlinear(y, tau, beta)
        return _linear(y, half, alpha, eps, k2)

    return FlowMap(apply, STRANG_META, name="cgl-strang")


def pulse_pair_profile(grid):
    """Two-bump initial field 0.8/cosh^2(x-10) + 0.8/cosh^2(x+10)."""
    x = grid.nodes
    return 0.8 / np.cosh(x - 10.0) ** 2 + 0.8 / np.cosh(x + 10.0) ** 2
