"""Composition combinators: complex schedules, real-axis projection, and
the recursive family of projected conjugate-pair methods.

The central construction: given a symmetric base method of even order 2n,
compose it at the conjugate steps ``gamma*tau`` and ``conj(gamma)*tau``
(one extra order) and average the result with its coefficient-conjugated
mirror.  For a real vector field and a real step the average is simply the
real part of the output, so the projected method costs the same as the
unprojected one; at complex steps (as used inside deeper recursion levels)
both mirror branches are evaluated.  Iterating the construction raises the
order by two per level until the pseudo-symmetry order of the base caps it.
"""

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .coefficients import gamma_double_jump, gamma_smallest_phase
from .errors import DomainError, ValidationError
from .flowmap import FlowMap, MethodMeta

COEFF_SUM_TOL = 1e-12


@dataclass(frozen=True)
class CompositionSchedule:
    """Ordered complex step coefficients applied to a base flow map.

    The composed method applies ``base`` at steps ``c[-1]*tau, ..., c[0]*tau``
    (the last coefficient acts first).  Coefficients must be finite and sum
    to 1 (consistency).
    """

    coefficients: tuple
    base: FlowMap
    meta: MethodMeta

    def __post_init__(self):
        coeffs = tuple(complex(c) for c in self.coefficients)
        if not coeffs:
            raise ValidationError("schedule needs at least one coefficient")
        if any(not (math.isfinite(c.real) and math.isfinite(c.imag)) for c in coeffs):
            raise ValidationError("coefficients must be finite")
        residual = abs(sum(coeffs) - 1.0)
        if residual > COEFF_SUM_TOL:
            raise ValidationError(
                f"coefficients must sum to 1, residual {residual:.3e}"
            )
        object.__setattr__(self, "coefficients", coeffs)


def compose_schedule(base, coefficients, meta):
    """Flow map applying ``base`` at the scheduled fractions of the step."""
    schedule = CompositionSchedule(tuple(coefficients), base, meta)
    reversed_coeffs = schedule.coefficients[::-1]

    def apply(x, tau):
        for c in reversed_coeffs:
            x = base(x, c * tau)
        return x

    name = f"schedule[{len(reversed_coeffs)}]({base.name})"
    flow = FlowMap(apply, meta, name=name)
    flow.schedule = schedule
    return flow


class _ConjugatePair:
    """Evaluator for ``base_{g tau} o base_{conj(g) tau}``."""

    __slots__ = ("base", "gamma")

    def __init__(self, base, gamma):
        self.base = base
        self.gamma = gamma

    def __call__(self, x, tau):
        x = self.base(x, self.gamma.conjugate() * tau)
        return self.base(x, self.gamma * tau)


def _conjugate_pair(base, gamma, meta):
    flow = FlowMap(_ConjugatePair(base, gamma), meta,
                   name=f"pair({base.name})")
    flow.gamma = gamma
    # Marks the pair structure so real_projection can declare the sharper
    # orders available for projected conjugate-pair compositions.
    flow.pair_base_meta = base.meta
    return flow


def double_jump(base, ell=0):
    """One-order gain: compose ``base`` at conjugate complex steps.

    ``base`` must have even order 2n; the steps are scaled by the
    double-jump coefficient of index ``ell`` (default: smallest phase).
    The result has order 2n+1 and pseudo-symmetry order 2n+1.
    """
    order = base.meta.order
    if order % 2 != 0:
        raise DomainError(f"double_jump needs an even-order base, got order {order}")
    gamma = gamma_double_jump(order, ell)
    meta = MethodMeta(
        order=order + 1,
        pseudo_symmetry_order=order + 1,
        pseudo_symplecticity_order=base.meta.pseudo_symplecticity_order,
        max_coeff_arg=base.meta.max_coeff_arg + abs(cmath.phase(gamma)),
    )
    return _conjugate_pair(base, gamma, meta)


class _RealProjection:
    """Average of a method with its coefficient-conjugated mirror.

    For a real vector field the mirror branch at step sigma equals
    ``conj(method(conj(x), conj(sigma)))``, so no explicit mirror method is
    needed.  With a real step the average collapses to the real part of a
    single evaluation; the input state must then be (numerically) real.
    """

    __slots__ = ("method",)

    def __init__(self, method):
        self.method = method

    def __call__(self, x, tau):
        if tau.imag == 0.0:
            scale = max(1.0, float(np.max(np.abs(x))) if x.size else 1.0)
            if float(np.max(np.abs(x.imag))) > 1e-14 * scale:
                raise DomainError(
                    "real projection at a real step requires a real state "
                    f"(imaginary magnitude {float(np.max(np.abs(x.imag))):.3e})"
                )
            y = self.method(x.real.astype(complex), tau)
            return y.real.astype(complex)
        y = self.method(x, tau)
        mirror = np.conj(self.method(np.conj(x), tau.conjugate()))
        return 0.5 * (y + mirror)


def _projection_meta(method):
    pair_meta = getattr(method, "pair_base_meta", None)
    if pair_meta is None:
        # Without the conjugate-pair structure nothing sharper than the
        # input method's own declared orders can be claimed.
        return method.meta
    n2 = pair_meta.order  # even order 2n of the underlying base
    q, r = pair_meta.pseudo_symmetry_order, pair_meta.pseudo_symplecticity_order
    if q >= n2 + 2:
        return MethodMeta(
            order=n2 + 2,
            pseudo_symmetry_order=min(q, 2 * n2 + 3),
            pseudo_symplecticity_order=min(q, r, 2 * n2 + 3),
            max_coeff_arg=method.meta.max_coeff_arg,
        )
    return MethodMeta(
        order=n2 + 1,
        pseudo_symmetry_order=n2 + 1,
        pseudo_symplecticity_order=min(r, n2 + 1),
        max_coeff_arg=method.meta.max_coeff_arg,
    )


def real_projection(method):
    """Project a complex-coefficient method for a real vector field.

    The returned map propagates with complex arithmetic and returns the
    real part of the output (exactly zero imaginary part) when evaluated at
    a real step on a real state; a state with a relative imaginary part
    above 1e-14 raises :class:`DomainError`.  At complex steps it averages
    the two mirror branches, which is what deeper recursion levels require.
    """
    flow = FlowMap(_RealProjection(method), _projection_meta(method),
                   name=f"Re({method.name})")
    flow.projected_from = method
    return flow


@dataclass
class RecursiveFamily:
    """Projected conjugate-pair methods stacked on a symmetric base.

    ``levels[i]`` is the i+1-fold application of the double-jump /
    projection step; ``coefficient_products[i]`` lists the 2^(i+1) products
    of step-scaling factors with which the base method is evaluated inside
    that level; ``capped[i]`` marks levels whose declared order hit the
    pseudo-symmetry cap of the construction.
    """

    base: FlowMap
    base_order: int
    levels: list
    coefficient_products: list
    capped: list

    def declared_orders(self):
        return [lvl.meta.order for lvl in self.levels]


def recursive_family(base, levels):
    """Build ``levels`` successive projected conjugate-pair methods.

    The base must be of even order 2n and symmetric (infinite
    pseudo-symmetry order) or at least pseudo-symmetric of order 2n+2.
    Orders rise by two per level until the pseudo-symmetry order of the
    running method caps them (e.g. 4, 6, 7 from a symmetric order-2 base);
    capped levels are flagged, not rejected.
    """
    if levels < 1:
        raise DomainError(f"levels must be >= 1, got {levels}")
    order = base.meta.order
    if order % 2 != 0:
        raise DomainError(f"recursive_family needs an even-order base, got {order}")
    if base.meta.pseudo_symmetry_order < order + 2:
        raise DomainError(
            "base must be symmetric or pseudo-symmetric of order at least "
            f"{order + 2}, got {base.meta.pseudo_symmetry_order}"
        )

    family_levels = []
    products = []
    capped_flags = []
    prev = base
    prev_products = [1.0 + 0.0j]
    for _ in range(levels):
        gamma = gamma_smallest_phase(prev.meta.order)
        if prev.meta.order % 2 == 0:
            pair_meta = MethodMeta(
                order=prev.meta.order + 1,
                pseudo_symmetry_order=prev.meta.order + 1,
                pseudo_symplecticity_order=prev.meta.pseudo_symplecticity_order,
                max_coeff_arg=prev.meta.max_coeff_arg + abs(cmath.phase(gamma)),
            )
            pair = _conjugate_pair(prev, gamma, pair_meta)
            level = real_projection(pair)
            capped = level.meta.order == prev.meta.order + 1
        else:
            # Order already capped at the pseudo-symmetry order; the extra
            # level is still constructible and keeps the capped order.
            pair_meta = MethodMeta(
                order=prev.meta.order,
                pseudo_symmetry_order=prev.meta.pseudo_symmetry_order,
                pseudo_symplecticity_order=prev.meta.pseudo_symplecticity_order,
                max_coeff_arg=prev.meta.max_coeff_arg + abs(cmath.phase(gamma)),
            )
            pair = _conjugate_pair(prev, gamma, pair_meta)
            level = FlowMap(_RealProjection(pair), pair_meta,
                            name=f"Re({pair.name})")
            capped = True
        prev_products = [gamma * p for p in prev_products] + [
            gamma.conjugate() * p for p in prev_products
        ]
        family_levels.append(level)
        products.append(list(prev_products))
        capped_flags.append(capped)
        prev = level

    return RecursiveFamily(
        base=base,
        base_order=order,
        levels=family_levels,
        coefficient_products=products,
        capped=capped_flags,
    )


def coefficient_arguments(family):
    """Largest |argument| over all base-method step coefficients of a family.

    Includes the base method's own internal coefficient arguments (zero for
    real-coefficient bases).  The boolean is True when every coefficient
    has a positive real part, i.e. the maximum argument stays below pi/2.
    """
    max_product_arg = max(
        abs(cmath.phase(p)) for level in family.coefficient_products for p in level
    )
    max_arg = max_product_arg + family.base.meta.max_coeff_arg
    return max_arg, max_arg < math.pi / 2
