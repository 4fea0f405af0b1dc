"""Principal complex logarithm and the analytic continuation of r^{-3}.

The branch used everywhere in this package is the principal one, written
in the half-angle form

    log(x + iy) = log|x + iy| + 2i arctan(y / (x + |x + iy|)),

which is quadrant-correct and stable near the positive real axis.  It is
undefined on the closed negative real axis; callers hitting the cut get a
:class:`SingularityError` rather than a silently wrong branch.
"""

import numpy as np

from .errors import SingularityError


def principal_log(z):
    """Principal logarithm of a scalar or array, imaginary part in (-pi, pi).

    Raises :class:`SingularityError` on the closed negative real axis
    (including 0); for arrays the first offending flat index is reported.

    In the left half-plane the half-angle expression is evaluated through
    the reflected identity ``sign(y) (pi - 2 arctan(|y| / (|z| - x)))``:
    the sum ``x + |z|`` cancels catastrophically near the cut, while
    ``|z| - x`` does not.
    """
    arr = np.asarray(z, dtype=complex)
    on_cut = (arr.imag == 0.0) & (arr.real <= 0.0)
    if np.any(on_cut):
        idx = int(np.argmax(on_cut.ravel()))
        value = complex(arr.ravel()[idx])
        raise SingularityError(
            f"principal logarithm undefined on the negative real axis: z={value}",
            index=idx, value=value,
        )
    x, y = arr.real, arr.imag
    modulus = np.abs(arr)
    in_right = x >= 0.0
    right = 2.0 * np.arctan(y / np.where(in_right, x + modulus, 1.0))
    left = np.sign(y) * (
        np.pi - 2.0 * np.arctan(np.abs(y) / np.where(in_right, 1.0, modulus - x))
    )
    result = np.log(modulus) + 1j * np.where(in_right, right, left)
    if np.isscalar(z) or np.ndim(z) == 0:
        return complex(result)
    return result


def analytic_inv_r3(z):
    """Analytic continuation of ``z^{-3/2}``, i.e. of 1/r^3 for ``z = r^2``.

    Computed as ``exp(-(3/2) principal_log(z))``; agrees with the real
    formula for real positive ``z`` and propagates the branch-cut error.
    """
    return np.exp(-1.5 * principal_log(z))
