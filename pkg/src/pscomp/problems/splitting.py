"""Fourth-order symmetric splitting with complex coefficients.

Nine-stage palindromic composition of the two exact flows of a splitting
f = f_a + f_b:

    b(b1) a(1/4) b(b2) a(1/4) b(b3) a(1/4) b(b2) a(1/4) b(b1)

(applied left to right) with b1 = 1/10 - i/30, b2 = 4/15 + 2i/15,
b3 = 4/15 - i/5.  All coefficients have positive real part; the largest
|argument| among them is arccos(4/5) (attained by b3).
"""

import math
from fractions import Fraction

from ..flowmap import INFINITE_ORDER, FlowMap, MethodMeta

#: Exact rational coefficient data; the complex values below derive from it.
S4SIM_A_FRACTIONS = (Fraction(1, 4),) * 4
S4SIM_B_FRACTIONS = (
    (Fraction(1, 10), Fraction(-1, 30)),
    (Fraction(4, 15), Fraction(2, 15)),
    (Fraction(4, 15), Fraction(-1, 5)),
)

S4SIM_A = tuple(float(a) for a in S4SIM_A_FRACTIONS)
S4SIM_B = tuple(complex(float(re), float(im)) for re, im in S4SIM_B_FRACTIONS)

#: Largest |argument| among the b coefficients, arccos(4/5).
S4SIM_MAX_ARG = math.acos(4.0 / 5.0)

# Stage coefficients in application order (first applied first).
_STAGES = (
    ("b", S4SIM_B[0]), ("a", S4SIM_A[0]),
    ("b", S4SIM_B[1]), ("a", S4SIM_A[1]),
    ("b", S4SIM_B[2]), ("a", S4SIM_A[2]),
    ("b", S4SIM_B[1]), ("a", S4SIM_A[3]),
    ("b", S4SIM_B[0]),
)


def s4sim(flow_a, flow_b):
    """Fourth-order symmetric method from the exact flows of a splitting.

    ``flow_a`` and ``flow_b`` must be the exact flows of the two parts; the
    palindromic arrangement then gives a symmetric method of order 4, and
    the declared metadata records symmetry (infinite pseudo-symmetry
    order) and the coefficient-argument bound used by the audit.
    """
    flows = {"a": flow_a, "b": flow_b}
    stages = tuple((flows[kind], coeff) for kind, coeff in _STAGES)

    def apply(x, tau):
        for flow, coeff in stages:
            x = flow(x, coeff * tau)
        return x

    meta = MethodMeta(
        order=4,
        pseudo_symmetry_order=INFINITE_ORDER,
        pseudo_symplecticity_order=min(
            flow_a.meta.pseudo_symplecticity_order,
            flow_b.meta.pseudo_symplecticity_order,
        ),
        max_coeff_arg=S4SIM_MAX_ARG,
    )
    return FlowMap(apply, meta, name=f"s4sim({flow_a.name},{flow_b.name})")
