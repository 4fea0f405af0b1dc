"""Planar two-body (Kepler) problem: H = p.p/2 - mu/r.

The kick stage needs 1/r^3 for complex stage positions, evaluated through
the principal logarithm so every stage map stays holomorphic off the
negative real axis of q1^2 + q2^2.  A trajectory crossing that cut raises
a :class:`SingularityError`; no alternative branch is chosen.

State vectors are laid out as ``[q1, q2, p1, p2]``.
"""

import math
from dataclasses import dataclass

import numpy as np

from ..complexlog import analytic_inv_r3
from ..errors import DomainError, SingularityError
from ..flowmap import EXACT_META, FlowMap, MethodMeta


@dataclass
class KeplerState:
    """Positions, momenta and gravitational parameter.

    Physical states are real; intermediate stage states of complex-step
    compositions may hold complex entries.
    """

    q: np.ndarray
    p: np.ndarray
    mu: float = 1.0

    def __post_init__(self):
        self.q = np.asarray(self.q, dtype=complex).reshape(2)
        self.p = np.asarray(self.p, dtype=complex).reshape(2)

    def as_vector(self):
        return np.concatenate([self.q, self.p])

    @classmethod
    def from_vector(cls, x, mu=1.0):
        return cls(q=x[:2], p=x[2:], mu=mu)


def kepler_initial_conditions(e):
    """Perihelion start of an orbit with eccentricity ``e`` and mu = 1.

    q = (1-e, 0), p = (0, sqrt((1+e)/(1-e))); the resulting trajectory has
    period 2*pi for every 0 <= e < 1.
    """
    if not 0.0 <= e < 1.0:
        raise DomainError(f"eccentricity must lie in [0, 1), got {e}")
    return KeplerState(
        q=np.array([1.0 - e, 0.0]),
        p=np.array([0.0, math.sqrt((1.0 + e) / (1.0 - e))]),
        mu=1.0,
    )


def kepler_energy(state):
    """Hamiltonian value of a real state; r = 0 raises."""
    q, p = state.q.real, state.p.real
    r = float(np.hypot(q[0], q[1]))
    if r == 0.0:
        raise SingularityError("collision: r = 0", value=0.0)
    return float(0.5 * (p @ p) - state.mu / r)


def _drift(x, tau):
    out = x.copy()
    out[:2] += tau * x[2:]
    return out


def _kick(x, tau, mu):
    z = x[0] * x[0] + x[1] * x[1]
    factor = tau * mu * analytic_inv_r3(z)
    out = x.copy()
    out[2:] -= factor * x[:2]
    return out


def kepler_drift(state, tau):
    """Exact flow of the kinetic part: q += tau p."""
    return KeplerState.from_vector(_drift(state.as_vector(), complex(tau)), mu=state.mu)


def kepler_kick(state, tau):
    """Exact flow of the potential part: p -= tau mu q / r^3 (analytic)."""
    return KeplerState.from_vector(
        _kick(state.as_vector(), complex(tau), state.mu), mu=state.mu
    )


def kepler_drift_flow(mu=1.0):
    return FlowMap(_drift, EXACT_META, name="kepler-drift")


def kepler_kick_flow(mu=1.0):
    def apply(x, tau):
        return _kick(x, tau, mu)

    return FlowMap(apply, EXACT_META, name="kepler-kick")


STRANG_META = MethodMeta(order=2, pseudo_symmetry_order=np.inf,
                         pseudo_symplecticity_order=np.inf)


def kepler_strang_flow(mu=1.0):
    """Second-order splitting: drift(tau/2), kick(tau), drift(tau/2)."""

    def apply(x, tau):
        half = tau / 2.0
        y = _drift(x, half)
        y = _kick(y, tau, mu)
        return _drift(y, half)

    return FlowMap(apply, STRANG_META, name="kepler-strang")
