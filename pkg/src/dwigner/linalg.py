"""
Dense complex linear algebra and state factories.

States are plain numpy arrays: a state vector is a unit-norm complex array of
shape (N,), a density matrix a Hermitian (N, N) complex array.  Everything
here returns fresh arrays and never mutates its inputs.
"""

import numpy as np

from .errors import DimensionError, NotUnitaryError

#: Largest Hilbert-space dimension accepted anywhere in the package.
MAX_DIM = 64
#: Largest Wigner grid side (2 * MAX_DIM).
MAX_GRID = 2 * MAX_DIM
#: Largest Z matrix side (MAX_DIM ** 2).
MAX_Z = MAX_DIM**2

#: Threshold below which a complex scalar counts as zero in structural checks.
ZERO_TOL = 1e-10
NORM_TOL = 1e-12


def check_dim(N):
    if int(N) != N or N < 1:
        raise DimensionError(f"dimension must be a positive integer, got {N!r}")
    if N > MAX_DIM:
        raise DimensionError(f"dimension {N} exceeds the configured cap MAX_DIM={MAX_DIM}")
    return int(N)


def _check_index(N, n, name):
    if int(n) != n or not 0 <= n < N:
        raise IndexError(f"{name}={n!r} out of range for dimension {N}")
    return int(n)


def make_computational_state(N, n0):
    """Position eigenstate |n0>."""
    N = check_dim(N)
    n0 = _check_index(N, n0, "n0")
    psi = np.zeros(N, dtype=complex)
    psi[n0] = 1.0
    return psi


def make_momentum_state(N, k0):
    """Momentum eigenstate |k0> = sum_n exp(i 2 pi n k0 / N) |n> / sqrt(N)."""
    N = check_dim(N)
    k0 = _check_index(N, k0, "k0")
    n = np.arange(N)
    return np.exp(2j * np.pi * n * k0 / N) / np.sqrt(N)


def make_superposition(N, n0, n1):
    """Equal-weight superposition (|n0> + |n1>) / sqrt(2) of two distinct basis states."""
    N = check_dim(N)
    n0 = _check_index(N, n0, "n0")
    n1 = _check_index(N, n1, "n1")
    if n0 == n1:
        raise ValueError(f"superposition needs two distinct indices, got n0 = n1 = {n0}")
    psi = np.zeros(N, dtype=complex)
    psi[[n0, n1]] = 1.0 / np.sqrt(2.0)
    return psi


def dft_matrix(N):
    """
    Unitary discrete Fourier transform F[n, k] = exp(i 2 pi n k / N) / sqrt(N).

    Column k is the momentum state |k>, so F maps |n> to |k = n>.  The
    inverse, F^dagger, is the exp(-i ...) kernel used by numpy.fft.fft.
    """
    N = check_dim(N)
    n = np.arange(N)
    return np.exp(2j * np.pi * np.outer(n, n) / N) / np.sqrt(N)


def pure_density(psi):
    psi = np.asarray(psi, dtype=complex)
    if psi.ndim != 1:
        raise DimensionError(f"state vector must be 1-d, got shape {psi.shape}")
    return np.outer(psi, psi.conj())


def adjoint(M):
    return np.asarray(M).conj().T


def multiply(A, B):
    A = np.asarray(A)
    B = np.asarray(B)
    if A.shape[-1] != B.shape[0]:
        raise DimensionError(f"cannot multiply shapes {A.shape} and {B.shape}")
    return A @ B


def trace(M):
    M = np.asarray(M)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise DimensionError(f"trace needs a square matrix, got shape {M.shape}")
    return complex(np.trace(M))


def frobenius_distance(A, B):
    A = np.asarray(A)
    B = np.asarray(B)
    if A.shape != B.shape:
        raise DimensionError(f"shape mismatch {A.shape} vs {B.shape}")
    return float(np.linalg.norm(A - B))


def hermiticity_error(M):
    M = np.asarray(M)
    return float(np.max(np.abs(M - M.conj().T), initial=0.0))


def unitarity_error(U):
    U = np.asarray(U)
    return float(np.max(np.abs(U @ U.conj().T - np.eye(U.shape[0]))))


def check_unitary(U, tol=ZERO_TOL):
    U = np.asarray(U, dtype=complex)
    if U.ndim != 2 or U.shape[0] != U.shape[1]:
        raise DimensionError(f"unitary must be square, got shape {U.shape}")
    check_dim(U.shape[0])
    err = unitarity_error(U)
    if err > tol:
        raise NotUnitaryError(f"matrix is not unitary: max|UU^dagger - I| = {err:.3e} > {tol:g}")
    return U


def as_density(rho, normalized=True):
    """Validate a density matrix; `normalized=False` admits trace != 1 (e.g. the identity)."""
    rho = np.asarray(rho, dtype=complex)
    if rho.ndim != 2 or rho.shape[0] != rho.shape[1]:
        raise DimensionError(f"density matrix must be square, got shape {rho.shape}")
    check_dim(rho.shape[0])
    err = hermiticity_error(rho)
    if err > ZERO_TOL:
        raise ValueError(f"density matrix is not Hermitian (max error {err:.3e})")
    if normalized and abs(np.trace(rho) - 1.0) > ZERO_TOL:
        raise ValueError(f"density matrix trace {np.trace(rho).real:.12g} != 1")
    return rho


# seeded random objects, all drawn from a numpy Generator


def random_state(N, rng):
    psi = rng.normal(size=N) + 1j * rng.normal(size=N)
    return psi / np.linalg.norm(psi)


def random_density(N, rng, rank=None):
    """Mixed state G G^dagger / Tr(G G^dagger) with complex Gaussian G of shape (N, rank)."""
    rank = N if rank is None else rank
    G = rng.normal(size=(N, rank)) + 1j * rng.normal(size=(N, rank))
    rho = G @ G.conj().T
    return rho / np.trace(rho).real


def random_unitary(N, rng):
    """Haar unitary: QR of a complex Gaussian matrix with the phases of R's diagonal removed."""
    G = (rng.normal(size=(N, N)) + 1j * rng.normal(size=(N, N))) / np.sqrt(2.0)
    Q, R = np.linalg.qr(G)
    d = np.diag(R)
    return Q * (d / np.abs(d))
