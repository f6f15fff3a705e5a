"""Dense complex linear algebra at the small fixed dimensions used here.

Everything operates on ``numpy.ndarray`` with ``complex128`` entries
(row-major).  Matrices in this package are 4x4, 8x8, or system-plus-bath
(512 for the default hyperfine bath); double precision leaves orders of
magnitude of headroom at these sizes, so tolerances are fixed once:
1e-12 for algebraic identities, 1e-8 for stepped-versus-exact propagator
comparisons.
"""

from __future__ import annotations

import numpy as np

from .errors import NonHermitianInput

CMatrix = np.ndarray

HERMITIAN_TOL = 1e-12
UNITARY_TOL = 1e-12


def as_cmatrix(m) -> CMatrix:
    """Coerce to a 2-D complex128 array."""
    a = np.asarray(m, dtype=np.complex128)
    if a.ndim != 2:
        raise ValueError(f"expected a matrix, got ndim={a.ndim}")
    return a


def dagger(m: CMatrix) -> CMatrix:
    """Conjugate transpose."""
    return np.asarray(m).conj().T


def max_abs(m) -> float:
    """Max-entry norm, the metric behind all elementwise tolerances."""
    return float(np.max(np.abs(m)))


def hermiticity_defect(m: CMatrix) -> float:
    return max_abs(m - dagger(m))


def is_hermitian(m: CMatrix, tol: float = HERMITIAN_TOL) -> bool:
    return hermiticity_defect(m) <= tol


def unitarity_defect(u: CMatrix) -> float:
    u = np.asarray(u)
    return max_abs(dagger(u) @ u - np.eye(u.shape[1]))


def is_unitary(u: CMatrix, tol: float = UNITARY_TOL) -> bool:
    return unitarity_defect(u) <= tol


def kron(a: CMatrix, b: CMatrix) -> CMatrix:
    """Kronecker product; block (i, j) of the result equals a[i, j] * b."""
    return np.kron(as_cmatrix(a), as_cmatrix(b))


def expm_hermitian(h: CMatrix, scale: float) -> CMatrix:
    """Unitary exp(-1j * scale * h) of a Hermitian generator.

    Evaluated through the eigendecomposition of ``h``, which keeps the
    result unitary to roundoff for any ``scale``.

    Raises
    ------
    NonHermitianInput
        If ``max|h - h^dag|`` exceeds 1e-12.
    """
    h = as_cmatrix(h)
    defect = hermiticity_defect(h)
    if defect > HERMITIAN_TOL:
        raise NonHermitianInput(
            f"generator deviates from Hermiticity by {defect:.3e} (tol {HERMITIAN_TOL:g})"
        )
    w, v = np.linalg.eigh(h)
    return (v * np.exp(-1j * scale * w)) @ v.conj().T


def svd(m: CMatrix) -> tuple[CMatrix, np.ndarray, CMatrix]:
    """Singular value decomposition m = u @ diag(s) @ dagger(v).

    Returns ``(u, s, v)`` with the singular values ``s`` non-negative and
    sorted descending, and ``u``, ``v`` unitary.  Note the third factor is
    ``v`` itself, not its adjoint.
    """
    u, s, vh = np.linalg.svd(as_cmatrix(m))
    return u, s, dagger(vh)
