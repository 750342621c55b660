"""
Unitary evolution in phase space.

Under rho -> U rho U^dagger the Wigner values on the first N x N subgrid
transform linearly, W'(a) = sum_b Z[a, b] W(b), with

    Z[a, b] = 4N Tr(A(a) U A(b) U^dagger).

The factor 4N comes from Tr(A(a) A(b)) = delta_ab / 4N on the first subgrid,
and makes Z(I) the identity.  Rows and columns are ordered a = q * N + p.

The full-grid index maps (:func:`translated`, :func:`reflected`,
:func:`fourier_rotated`) state the exact classical action of translations,
reflections and the Fourier transform; the ``check_*`` functions compare them
against brute-force evolution of the state.
"""

from dataclasses import dataclass, field
from typing import Dict, Tuple

import numpy as np

from .errors import NotUnitaryError
from .linalg import adjoint, check_dim, check_unitary, dft_matrix, unitarity_error
from .schwinger import t_displacement
from .wigner import (
    checked_real,
    fold_to_fundamental,
    grid_dim,
    phase_point_operator,
    point_traces,
    reconstruct_density,
    unfold_from_fundamental,
    wigner_of_density,
)

GRID_TOL = 1e-10
UNITARY_TOL = 1e-9
DEFAULT_EPSILON = 1e-6


def z_scale(N):
    """Normalisation making Z(identity) the identity matrix."""
    return 4 * N


def z_matrix(U, method=None):
    """Real orthogonal N^2 x N^2 matrix propagating first-subgrid Wigner values under U."""
    U = check_unitary(U)
    N = U.shape[0]
    Ud = adjoint(U)
    cols = []
    for q in range(N):
        for p in range(N):
            traces = point_traces(U @ phase_point_operator(N, q, p) @ Ud, method)
            cols.append(traces[:N, :N].ravel())
    return z_scale(N) * checked_real(np.array(cols).T)


def apply_z(Z, w):
    """Propagate a full grid with Z through its fundamental subgrid."""
    N = grid_dim(w)
    sub = fold_to_fundamental(w)
    return unfold_from_fundamental((np.asarray(Z) @ sub.ravel()).reshape(N, N))


def point_index(N, alpha):
    return int(alpha[0]) % N * N + int(alpha[1]) % N


def index_point(N, index):
    return divmod(int(index), N)


@dataclass(frozen=True)
class MapClassification:
    kind: str
    #: for deterministic maps W'(a) = signs[a] * W(source[a]), keys are subgrid points
    source: Dict[Tuple[int, int], Tuple[int, int]] = field(default_factory=dict)
    signs: Dict[Tuple[int, int], int] = field(default_factory=dict)

    @property
    def deterministic(self):
        return self.kind == "deterministic"


def classify_map(Z, epsilon=DEFAULT_EPSILON, unit_tol=1e-9):
    """
    Deterministic iff every row and every column of Z holds exactly one entry
    above ``epsilon`` in magnitude and that entry is +-1 within ``unit_tol``.
    """
    Z = np.asarray(Z, dtype=float)
    N = int(round(np.sqrt(Z.shape[0])))
    big = np.abs(Z) > epsilon
    if not (np.all(big.sum(axis=1) == 1) and np.all(big.sum(axis=0) == 1)):
        return MapClassification("nonlocal")
    cols = np.argmax(big, axis=1)
    vals = Z[np.arange(Z.shape[0]), cols]
    if np.max(np.abs(np.abs(vals) - 1.0)) > unit_tol:
        return MapClassification("nonlocal")
    source = {index_point(N, a): index_point(N, b) for a, b in enumerate(cols)}
    signs = {index_point(N, a): int(np.sign(v)) for a, v in enumerate(vals)}
    return MapClassification("deterministic", source, signs)


def evolve_grid(w, U):
    """Wigner grid of U rho U^dagger, with rho rebuilt from ``w``."""
    N = grid_dim(w)
    U = np.asarray(U, dtype=complex)
    if U.shape != (N, N):
        raise ValueError(f"unitary shape {U.shape} does not match grid dimension {N}")
    rho = reconstruct_density(w)
    rho = U @ rho @ adjoint(U)
    return wigner_of_density(0.5 * (rho + adjoint(rho)))


# named unitaries


def fourier_unitary(N, inverse=False):
    F = dft_matrix(N)
    return adjoint(F) if inverse else F


def reflection_unitary(N, alpha0):
    """2N A(alpha0): a point reflection through alpha0."""
    R = 2 * N * np.array(phase_point_operator(N, *alpha0))
    err = unitarity_error(R)
    if err > UNITARY_TOL:
        raise NotUnitaryError(f"2N A{tuple(alpha0)} is not unitary (error {err:.3e})")
    return R


def pauli_z(N, bit):
    """
    sigma_z on one qubit, acting as (-1)^(bit ``bit`` of n) on |n>.

    ``bit = 0`` is the parity of n, i.e. V^(N/2), itself a translation.
    """
    N = check_dim(N)
    nbits = N.bit_length() - 1
    if N != 1 << nbits:
        raise ValueError(f"sigma_z needs N to be a power of two, got {N}")
    if not 0 <= bit < nbits:
        raise IndexError(f"bit {bit} out of range for {nbits} qubits")
    n = np.arange(N)
    return np.diag((-1.0) ** ((n >> bit) & 1)).astype(complex)


# exact phase-space actions on the full grid


def _qp(w):
    M = 2 * grid_dim(w)
    return M, *np.indices((M, M))


def translated(w, m, k):
    """W'(q, p) = W(q - 2m, p - 2k)."""
    M, q, p = _qp(w)
    return np.asarray(w)[(q - 2 * m) % M, (p - 2 * k) % M]


def reflected(w, alpha0):
    """W'(q, p) = W(2 q0 - q, 2 p0 - p)."""
    M, q, p = _qp(w)
    q0, p0 = alpha0
    return np.asarray(w)[(2 * q0 - q) % M, (2 * p0 - p) % M]


def fourier_rotated(w, inverse=False):
    """
    Quarter turn produced by the Fourier transform.

    With F[n, k] = exp(+i 2 pi n k / N) / sqrt(N), F gives W'(q, p) = W(p, -q)
    and F^dagger gives W'(q, p) = W(-p, q).
    """
    M, q, p = _qp(w)
    w = np.asarray(w)
    return w[(-p) % M, q] if inverse else w[p, (-q) % M]


def _max_dev(a, b):
    return float(np.max(np.abs(a - b)))


def check_fourier_rotation(w, inverse=False, tol=GRID_TOL):
    U = fourier_unitary(grid_dim(w), inverse)
    return _max_dev(evolve_grid(w, U), fourier_rotated(w, inverse)) <= tol


def check_translation_covariance(w, m, k, tol=GRID_TOL):
    N = grid_dim(w)
    return _max_dev(evolve_grid(w, t_displacement(N, m, k)), translated(w, m, k)) <= tol


def check_reflection(w, alpha0, tol=GRID_TOL):
    R = reflection_unitary(grid_dim(w), alpha0)
    return _max_dev(evolve_grid(w, R), reflected(w, alpha0)) <= tol
