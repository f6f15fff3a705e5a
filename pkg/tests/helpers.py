"""Shared test utilities: seeded random matrices and couplings."""

import numpy as np

from spinholonomy import ExchangeCouplings, couplings_to_polar


def haar_unitary(rng, n: int) -> np.ndarray:
    """Haar-random unitary via QR of a complex Ginibre matrix."""
    z = (rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))) / np.sqrt(2)
    q, r = np.linalg.qr(z)
    return q * (np.diag(r) / np.abs(np.diag(r)))


def random_matrix(rng, n: int) -> np.ndarray:
    return rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))


def random_couplings(rng, min_omega: float = 0.1) -> ExchangeCouplings:
    """Random couplings with omega bounded away from zero."""
    while True:
        c = ExchangeCouplings(*rng.uniform(-2.0, 2.0, size=4))
        if couplings_to_polar(c).omega >= min_omega:
            return c


def local_product(rng) -> np.ndarray:
    """Random single-qubit-only two-qubit unitary k1 (x) k2."""
    return np.kron(haar_unitary(rng, 2), haar_unitary(rng, 2))
