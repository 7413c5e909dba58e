"""The counterexample pair a, b in C(S^4, M2(C)) and its exact identities.

The two elements are rank-one matrix fields over the embedded 4-sphere,

    a(z0, z1, z2) = [[z0, 0], [z1, 0]] / (1 + i z2),
    b(z0, z1, z2) = [[conj z0, conj z1], [0, 0]] / (1 + i z2),

and everything of interest happens to their normalized products:

  * 1 - 2ab equals, pointwise, the unitary-valued map

        c = I - 2/(1 + i z2)^2 * [[z0 conj z0, z0 conj z1],
                                  [z1 conj z0, z1 conj z1]],

  * 1 - 2ba equals diag(phi(z2), 1) with
    phi(z2) = -((1 - i z2)/(1 + i z2))^2, a unit-modulus scalar that
    traverses the full unit circle as z2 runs over [-1, 1].

Both equalities are checked here by literal matrix multiplication of the
operand evaluations against the closed forms, never the other way round:
the closed forms are the oracle side. The shared nonzero pointwise
eigenvalue of ab and ba is (1 - z2^2)/(1 + i z2)^2, which parameterizes
the circle of radius 1/2 centred at 1/2.

The classical inverse identity -- if 1 - ab is invertible with inverse u
then 1 + b u a inverts 1 - ba -- is exposed with a scalar probe mu
(replace a by mu*a) so that spectral points lambda = 1/mu other than 1
can be exercised. All evaluators broadcast over arrays of coordinates.
"""

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .linalg2 import cond2, eig2, mat2, mat_inv, mat_mul, op_norm

__all__ = [
    "DomainError",
    "phi",
    "eval_one",
    "eval_a",
    "eval_b",
    "eval_c",
    "eval_ab",
    "eval_ba",
    "eval_one_minus_2ab",
    "eval_one_minus_2ba",
    "product_eigenvalue",
    "check_inverse_identity",
    "inverse_identity_sweep",
    "identity_residuals",
    "IdentityResiduals",
    "Element",
    "ELEMENTS",
    "MU_PROBES",
    "CHUNK",
]

# fixed probe multipliers for the inverse identity; 1/mu probes the
# spectral point lambda = 1/mu (mu = 1 is singular exactly on the equator)
MU_PROBES = (0.0, 0.5, 1.0, 2.0, -1.0, 1j, -2j, 1 + 1j)

# sweep granularity: large enough to amortize numpy dispatch, small
# enough to keep temporaries of a 4M-point mesh out of memory trouble
CHUNK = 1 << 19


class DomainError(ValueError):
    """Argument outside the function's documented domain."""


def _coords(z0, z1, z2):
    z0 = np.asarray(z0, dtype=np.complex128)
    z1 = np.asarray(z1, dtype=np.complex128)
    z2 = np.asarray(z2, dtype=np.float64)
    return z0, z1, z2


def phi(z2):
    """phi(z2) = -((1 - i z2)/(1 + i z2))^2, unit modulus on [-1, 1].

    phi(0) = -1, phi(+-1) = 1. Inputs within 1e-12 of the interval are
    clamped (guards one-ulp overshoot in convex combinations); anything
    further out raises DomainError.
    """
    z2 = np.asarray(z2, dtype=np.float64)
    if np.any(np.abs(z2) > 1.0 + 1e-12):
        raise DomainError("phi requires z2 in [-1, 1]")
    z2 = np.clip(z2, -1.0, 1.0)
    w = (1.0 - 1j * z2) / (1.0 + 1j * z2)
    return -(w * w)


def eval_one(z0, z1, z2):
    z0, z1, z2 = _coords(z0, z1, z2)
    shape = np.broadcast(z0, z1, z2).shape
    out = np.zeros(shape + (2, 2), dtype=np.complex128)
    out[..., 0, 0] = 1.0
    out[..., 1, 1] = 1.0
    return out


def eval_a(z0, z1, z2):
    """First column (z0, z1)/(1 + i z2), second column zero."""
    z0, z1, z2 = _coords(z0, z1, z2)
    w = 1.0 / (1.0 + 1j * z2)
    zero = np.zeros(np.broadcast(z0, z1, z2).shape, dtype=np.complex128)
    return mat2(z0 * w, zero, z1 * w, zero)


def eval_b(z0, z1, z2):
    """First row (conj z0, conj z1)/(1 + i z2), second row zero."""
    z0, z1, z2 = _coords(z0, z1, z2)
    w = 1.0 / (1.0 + 1j * z2)
    zero = np.zeros(np.broadcast(z0, z1, z2).shape, dtype=np.complex128)
    return mat2(np.conj(z0) * w, np.conj(z1) * w, zero, zero)


def eval_c(z0, z1, z2):
    """The closed-form unitary map c (oracle for 1 - 2ab, never its computation path)."""
    z0, z1, z2 = _coords(z0, z1, z2)
    w = 1.0 / (1.0 + 1j * z2)
    beta = w * w
    return mat2(
        1.0 - 2.0 * beta * z0 * np.conj(z0),
        -2.0 * beta * z0 * np.conj(z1),
        -2.0 * beta * z1 * np.conj(z0),
        1.0 - 2.0 * beta * z1 * np.conj(z1),
    )


def eval_ab(z0, z1, z2):
    return mat_mul(eval_a(z0, z1, z2), eval_b(z0, z1, z2))


def eval_ba(z0, z1, z2):
    return mat_mul(eval_b(z0, z1, z2), eval_a(z0, z1, z2))


def eval_one_minus_2ab(z0, z1, z2):
    """I - 2 a(x) b(x), computed by literal matrix multiplication."""
    return eval_one(z0, z1, z2) - 2.0 * eval_ab(z0, z1, z2)


def eval_one_minus_2ba(z0, z1, z2):
    """I - 2 b(x) a(x); equals diag(phi(z2), 1) pointwise."""
    return eval_one(z0, z1, z2) - 2.0 * eval_ba(z0, z1, z2)


def product_eigenvalue(z2):
    """The shared nonzero eigenvalue (1 - z2^2)/(1 + i z2)^2 of ab and ba."""
    z2 = np.asarray(z2, dtype=np.float64)
    w = 1.0 / (1.0 + 1j * z2)
    return (1.0 - z2 * z2) * w * w


@dataclass(frozen=True)
class Element:
    """A named built-in element of C(S^4, M2) with its evaluator."""

    name: str
    evaluate: Callable


ELEMENTS = {
    e.name: e
    for e in (
        Element("one", eval_one),
        Element("a", eval_a),
        Element("b", eval_b),
        Element("ab", eval_ab),
        Element("ba", eval_ba),
        Element("one-minus-2ab", eval_one_minus_2ab),
        Element("one-minus-2ba", eval_one_minus_2ba),
    )
}


def check_inverse_identity(z0, z1, z2, mu):
    """Residual ||(I - mu ba)(I + mu b u a) - I|| with u = (I - mu ab)^{-1}.

    Zero in exact arithmetic whenever I - mu ab is invertible; raises
    SingularMatrix (from mat_inv) when it is not. For condition numbers
    up to 1e6 the residual stays below 1e-10.
    """
    a = eval_a(z0, z1, z2)
    b = eval_b(z0, z1, z2)
    one = eval_one(z0, z1, z2)
    u = mat_inv(one - mu * mat_mul(a, b))
    lhs = mat_mul(one - mu * mat_mul(b, a), one + mu * mat_mul(b, mat_mul(u, a)))
    res = op_norm(lhs - one)
    return float(res) if res.ndim == 0 else res


def inverse_identity_sweep(mesh, mus=MU_PROBES, cond_limit=1e6):
    """Max inverse-identity residual over mesh x probe values, conditioned cases only.

    Points where cond(I - mu ab) exceeds cond_limit (or the matrix is
    below the singularity threshold) are skipped; returns
    (max_residual, skipped_count).
    """
    z0, z1, z2 = mesh.arrays()
    worst = 0.0
    skipped = 0
    for i in range(0, len(z0), CHUNK):
        a = eval_a(z0[i : i + CHUNK], z1[i : i + CHUNK], z2[i : i + CHUNK])
        b = eval_b(z0[i : i + CHUNK], z1[i : i + CHUNK], z2[i : i + CHUNK])
        ab = mat_mul(a, b)
        ba = mat_mul(b, a)
        one = np.broadcast_to(np.eye(2, dtype=np.complex128), ab.shape)
        for mu in mus:
            m = one - mu * ab
            cond = cond2(m)
            ok = cond <= cond_limit
            skipped += int(np.count_nonzero(~ok))
            if not np.any(ok):
                continue
            mok = m[ok]
            u = mat_inv(mok)
            lhs = mat_mul(
                one[ok] - mu * ba[ok],
                one[ok] + mu * mat_mul(b[ok], mat_mul(u, a[ok])),
            )
            worst = max(worst, float(op_norm(lhs - one[ok]).max()))
    return worst, skipped


@dataclass(frozen=True)
class IdentityResiduals:
    """Worst-case deviations of the closed-form identities over a mesh (operator norm)."""

    ab_vs_c: float
    ba_vs_diag: float
    phi_unit_modulus: float
    a_rank_one: float
    b_rank_one: float
    ab_eigenvalues: float

    def worst(self):
        return max(
            self.ab_vs_c,
            self.ba_vs_diag,
            self.phi_unit_modulus,
            self.a_rank_one,
            self.b_rank_one,
            self.ab_eigenvalues,
        )


def identity_residuals(mesh):
    """Sweep the algebra identities over a mesh, returning per-identity maxima.

    Checked against closed forms derived by hand:
    a^2 = (z0/(1+i z2)) a, b^2 = (conj z0/(1+i z2)) b (rank-one algebra),
    1-2ab = c, 1-2ba = diag(phi, 1), and eig(ab) = {product eigenvalue, 0}.
    """
    z0, z1, z2 = mesh.arrays()
    r_ab = r_ba = r_phi = r_a2 = r_b2 = r_eig = 0.0
    for i in range(0, len(z0), CHUNK):
        x0, x1, x2 = z0[i : i + CHUNK], z1[i : i + CHUNK], z2[i : i + CHUNK]
        a = eval_a(x0, x1, x2)
        b = eval_b(x0, x1, x2)
        ab = mat_mul(a, b)
        one = np.broadcast_to(np.eye(2, dtype=np.complex128), ab.shape)

        r_ab = max(r_ab, float(op_norm((one - 2.0 * ab) - eval_c(x0, x1, x2)).max()))

        ph = phi(x2)
        diag = mat2(ph, np.zeros_like(ph), np.zeros_like(ph), np.ones_like(ph))
        r_ba = max(r_ba, float(op_norm((one - 2.0 * mat_mul(b, a)) - diag).max()))
        r_phi = max(r_phi, float(np.abs(np.abs(ph) - 1.0).max()))

        w = 1.0 / (1.0 + 1j * x2)
        r_a2 = max(r_a2, float(op_norm(mat_mul(a, a) - (x0 * w)[..., None, None] * a).max()))
        r_b2 = max(
            r_b2,
            float(op_norm(mat_mul(b, b) - (np.conj(x0) * w)[..., None, None] * b).max()),
        )

        lam = product_eigenvalue(x2)
        expect = np.stack([np.zeros_like(lam), lam], axis=-1)
        # sort the expected pair the same way eig2 sorts its output
        swap = (expect[..., 0].real > expect[..., 1].real) | (
            (expect[..., 0].real == expect[..., 1].real)
            & (expect[..., 0].imag > expect[..., 1].imag)
        )
        lo = np.where(swap, expect[..., 1], expect[..., 0])
        hi = np.where(swap, expect[..., 0], expect[..., 1])
        got = eig2(ab)
        r_eig = max(
            r_eig,
            float(np.abs(got[..., 0] - lo).max()),
            float(np.abs(got[..., 1] - hi).max()),
        )
    return IdentityResiduals(r_ab, r_ba, r_phi, r_a2, r_b2, r_eig)
