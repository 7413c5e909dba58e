"""Closed-form linear algebra for complex 2x2 matrices.

Everything here works on a single (2, 2) array or on a stack shaped
(..., 2, 2), complex dtype. No LAPACK: eigenvalues, inverses, singular
values and condition numbers of 2x2 matrices all have exact formulas,
which keeps a sweep over a few million mesh points cheap and makes the
results bit-for-bit reproducible.
"""

import numpy as np

__all__ = [
    "SingularMatrix",
    "SINGULARITY_RTOL",
    "mat2",
    "mat_mul",
    "eig2",
    "mat_inv",
    "op_norm",
    "cond2",
]

# |det| <= SINGULARITY_RTOL * op_norm(m)^2 is treated as singular.
# Scale-invariant: both sides are quadratic in the matrix scale.
SINGULARITY_RTOL = 1e-14


class SingularMatrix(ArithmeticError):
    """Raised when a matrix (or any matrix in a stack) fails the invertibility threshold."""


def mat2(m00, m01, m10, m11):
    """Assemble a (..., 2, 2) complex stack from four broadcastable entry arrays."""
    m00, m01, m10, m11 = np.broadcast_arrays(m00, m01, m10, m11)
    out = np.empty(np.shape(m00) + (2, 2), dtype=np.complex128)
    out[..., 0, 0] = m00
    out[..., 0, 1] = m01
    out[..., 1, 0] = m10
    out[..., 1, 1] = m11
    return out


def _entries(m):
    m = np.asarray(m, dtype=np.complex128)
    if m.shape[-2:] != (2, 2):
        raise ValueError(f"expected trailing shape (2, 2), got {m.shape}")
    return m[..., 0, 0], m[..., 0, 1], m[..., 1, 0], m[..., 1, 1]


def mat_mul(x, y):
    """Matrix product of two (..., 2, 2) stacks (literal multiplication, no shortcuts)."""
    return np.asarray(x, dtype=np.complex128) @ np.asarray(y, dtype=np.complex128)


def eig2(m):
    """Both eigenvalues of each 2x2 matrix, shape (..., 2).

    Roots of lambda^2 - tr*lambda + det via the stable quadratic formula:
    the half-discriminant is added to the mean with the sign that avoids
    cancellation, giving the larger-magnitude root first; the second root
    is det/root1 (exact product relation), or 0 when root1 is 0, which
    happens only for the zero-trace, zero-det case. The returned pair is
    sorted lexicographically by (re, im) so set comparisons are
    deterministic.
    """
    a, b, c, d = _entries(m)
    mid = 0.5 * (a + d)
    disc = np.sqrt(((a - d) * 0.5) ** 2 + b * c)
    # pick the sign of the discriminant that grows |mid + disc|
    disc = np.where(np.real(np.conj(disc) * mid) < 0.0, -disc, disc)
    r1 = mid + disc
    det = a * d - b * c
    safe = np.where(r1 == 0, 1.0, r1)
    r2 = np.where(r1 == 0, 0.0 + 0.0j, det / safe)
    swap = (r1.real > r2.real) | ((r1.real == r2.real) & (r1.imag > r2.imag))
    lo = np.where(swap, r2, r1)
    hi = np.where(swap, r1, r2)
    return np.stack([lo, hi], axis=-1)


def op_norm(m):
    """Largest singular value, from the closed-form eigenvalues of the 2x2 Gram matrix."""
    a, b, c, d = _entries(m)
    g00 = np.abs(a) ** 2 + np.abs(c) ** 2
    g11 = np.abs(b) ** 2 + np.abs(d) ** 2
    g01 = np.conj(a) * b + np.conj(c) * d
    mid = 0.5 * (g00 + g11)
    rad = np.sqrt((0.5 * (g00 - g11)) ** 2 + np.abs(g01) ** 2)
    return np.sqrt(np.maximum(mid + rad, 0.0))


def cond2(m):
    """2-norm condition number sigma_max/sigma_min = sigma_max^2/|det| (inf when singular)."""
    a, b, c, d = _entries(m)
    det = a * d - b * c
    smax = op_norm(m)
    with np.errstate(divide="ignore", invalid="ignore"):
        out = np.where(det == 0, np.inf, smax**2 / np.abs(np.where(det == 0, 1.0, det)))
    return out


def mat_inv(m):
    """Adjugate inverse of each matrix in the stack.

    Raises SingularMatrix if any |det| <= SINGULARITY_RTOL * op_norm^2.
    For condition numbers below 1e6 the residual ||m @ mat_inv(m) - I||
    stays within a small multiple of machine epsilon times the condition
    number.
    """
    a, b, c, d = _entries(m)
    det = a * d - b * c
    if np.any(np.abs(det) <= SINGULARITY_RTOL * op_norm(m) ** 2):
        raise SingularMatrix("matrix below invertibility threshold")
    return mat2(d / det, -b / det, -c / det, a / det)
