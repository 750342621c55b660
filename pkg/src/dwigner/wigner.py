"""
Phase-space point operators and discrete Wigner functions on the 2N x 2N grid.

A Wigner grid is a real numpy array ``w`` of shape (2N, 2N) indexed
``w[q, p]``.  The point operator is

    A(q, p) = (2N)^-2 sum_{l, l'=0}^{2N-1} T(l, l') exp(-i 2 pi (l' q - l p) / 2N)

and W(q, p) = Tr(rho A(q, p)).  Carrying out the l' sum leaves a monomial
matrix,

    A(q, p)[a, b] = delta_N(a + b - q) exp(i pi p ((q - 2b) mod 2N) / N) / 2N,

which is what :func:`phase_point_operator` builds.  The literal double sum is
kept as ``method="sum"`` for cross-checking.

Two grid evaluation paths exist: ``"trace"`` contracts rho against every
cached operator, ``"fft"`` computes the characteristic function
chi(l, l') = Tr(rho T(l, l')) and takes a 2-d FFT.  They agree to roundoff;
``"fft"`` is the default for N > 8.
"""

import functools
import warnings

import numpy as np

from .errors import DimensionError, ImaginaryResidueError, SubgridRelationError
from .linalg import ZERO_TOL, as_density, check_dim
from .schwinger import t_displacement

FAST_PATH_ABOVE = 8
#: |Im Tr(rho A)| at or above this is a construction error.
IMAG_ERROR_TOL = 1e-8

METHODS = ("trace", "fft")


def grid_dim(w):
    """Hilbert-space dimension N of a (2N, 2N) grid."""
    w = np.asarray(w)
    if w.ndim != 2 or w.shape[0] != w.shape[1] or w.shape[0] % 2:
        raise DimensionError(f"Wigner grid must be (2N, 2N), got shape {w.shape}")
    return check_dim(w.shape[0] // 2)


def _closed_form_operator(N, q, p):
    a, b = np.indices((N, N))
    phase = np.exp(1j * np.pi * ((p * ((q - 2 * b) % (2 * N))) % (2 * N)) / N)
    return np.where((a + b - q) % N == 0, phase, 0.0) / (2 * N)


def _summed_operator(N, q, p):
    M = 2 * N
    out = np.zeros((N, N), dtype=complex)
    for lam in range(M):
        for lamp in range(M):
            out += t_displacement(N, lam, lamp) * np.exp(-2j * np.pi * ((lamp * q - lam * p) % M) / M)
    return out / M**2


@functools.lru_cache(maxsize=4 * 32**2)
def _cached_operator(N, q, p):
    A = _closed_form_operator(N, q, p)
    A.flags.writeable = False
    return A


def phase_point_operator(N, q, p, method="closed"):
    """
    Point operator A(q, p) as an (N, N) complex array.

    The closed-form result is cached and returned read-only.  ``method="sum"``
    evaluates the defining double sum over displacements (O(N^4), uncached).
    """
    N = check_dim(N)
    q %= 2 * N
    p %= 2 * N
    if method == "closed":
        return _cached_operator(N, q, p)
    if method == "sum":
        return _summed_operator(N, q, p)
    raise ValueError(f"unknown method {method!r}")


@functools.lru_cache(maxsize=4)
def point_operators(N):
    """All 4N^2 operators stacked as a read-only (2N, 2N, N, N) array."""
    N = check_dim(N)
    q, p, a, b = np.ix_(*(np.arange(2 * N),) * 2, *(np.arange(N),) * 2)
    phase = np.exp(1j * np.pi * ((p * ((q - 2 * b) % (2 * N))) % (2 * N)) / N)
    ops = np.where((a + b - q) % N == 0, phase, 0.0) / (2 * N)
    ops.flags.writeable = False
    return ops


def _fft_traces(g, N):
    # g[l, b] = X[b, (b + l) mod N] for l in [0, 2N); returns Tr(X A(q, p)) as [q, p]
    M = 2 * N
    lam = np.arange(M)
    h = N * np.fft.ifft(g, axis=1)
    chi = h[:, lam % N] * np.exp(1j * np.pi * (np.outer(lam, lam) % M) / N)
    B = M * np.fft.ifft(np.fft.fft(chi, axis=1), axis=0)
    return B.T / M**2


def point_traces(X, method=None):
    """Tr(X A(q, p)) over the full grid, complex (2N, 2N); X need not be Hermitian."""
    X = np.asarray(X, dtype=complex)
    if X.ndim != 2 or X.shape[0] != X.shape[1]:
        raise DimensionError(f"operator must be square, got shape {X.shape}")
    N = check_dim(X.shape[0])
    if method is None:
        method = "fft" if N > FAST_PATH_ABOVE else "trace"
    if method == "trace":
        return np.einsum("ba,qpab->qp", X, point_operators(N))
    if method == "fft":
        lam = np.arange(2 * N)[:, None]
        b = np.arange(N)[None, :]
        return _fft_traces(X[b, (b + lam) % N], N)
    raise ValueError(f"unknown method {method!r}; expected one of {METHODS}")


def checked_real(traces):
    imag = float(np.max(np.abs(traces.imag)))
    if imag >= IMAG_ERROR_TOL:
        raise ImaginaryResidueError(f"Tr(rho A) has imaginary residue {imag:.3e}; point operators are broken")
    if imag >= ZERO_TOL:
        warnings.warn(f"imaginary residue {imag:.3e} above {ZERO_TOL:g}", RuntimeWarning, stacklevel=3)
    return np.ascontiguousarray(traces.real)


def wigner_of_density(rho, method=None):
    """
    W(q, p) = Re Tr(rho A(q, p)) on the full grid.

    ``rho`` must be Hermitian; its trace is not forced to one so that
    operators such as the identity can be transformed.  Raises
    ImaginaryResidueError if any trace has |Im| >= 1e-8.
    """
    rho = as_density(rho, normalized=False)
    return checked_real(point_traces(rho, method))


def wigner_of_state(psi):
    """Wigner grid of a pure state, computed from the amplitudes without forming rho."""
    psi = np.asarray(psi, dtype=complex)
    if psi.ndim != 1:
        raise DimensionError(f"state vector must be 1-d, got shape {psi.shape}")
    N = check_dim(psi.size)
    lam = np.arange(2 * N)[:, None]
    b = np.arange(N)[None, :]
    g = psi[b] * psi[(b + lam) % N].conj()
    return checked_real(_fft_traces(g, N))


def reconstruct_density(w):
    """rho = N sum_{q,p} W(q, p) A(q, p), evaluated through an FFT along p."""
    w = np.asarray(w, dtype=float)
    N = grid_dim(w)
    M = 2 * N
    # G[q, s] = sum_p W[q, p] exp(i pi p s / N)
    G = M * np.fft.ifft(w, axis=1)
    a, b = np.indices((N, N))
    q0 = (a + b) % N
    q1 = q0 + N
    return 0.5 * (G[q0, (q0 - 2 * b) % M] + G[q1, (q1 - 2 * b) % M])


def inner_product_from_grids(w1, w2):
    """Tr(rho1 rho2) = N sum_{q,p} W1(q, p) W2(q, p)."""
    N = grid_dim(w1)
    if np.shape(w1) != np.shape(w2):
        raise DimensionError(f"grid shapes differ: {np.shape(w1)} vs {np.shape(w2)}")
    return float(N * np.sum(np.asarray(w1) * np.asarray(w2)))


def subgrid_signs(N):
    """
    Sign array s[sq, sp, q, p] with W(sq N + q, sp N + p) = s W(q, p),
    s = (-1)^(sq p + sp q + N sq sp), for q, p in [0, N).
    """
    sq, sp, q, p = np.ix_([0, 1], [0, 1], np.arange(N), np.arange(N))
    return (-1) ** ((sq * p + sp * q + N * sq * sp) % 2)


def unfold_from_fundamental(sub):
    """Rebuild the full 2N x 2N grid from its first N x N subgrid."""
    sub = np.asarray(sub, dtype=float)
    N = sub.shape[0]
    s = subgrid_signs(N) * sub
    return np.block([[s[0, 0], s[0, 1]], [s[1, 0], s[1, 1]]])


def fold_to_fundamental(w, tol=ZERO_TOL):
    """
    Return the first N x N subgrid after checking that it determines the rest.

    Raises SubgridRelationError naming the worst point when the sign relation
    between the four subgrids fails by more than ``tol``.
    """
    w = np.asarray(w, dtype=float)
    N = grid_dim(w)
    sub = w[:N, :N].copy()
    err = np.abs(unfold_from_fundamental(sub) - w)
    if err.max() > tol:
        q, p = np.unravel_index(np.argmax(err), err.shape)
        raise SubgridRelationError(
            f"subgrid relation violated at (q, p) = ({q}, {p}) by {err[q, p]:.3e}", point=(int(q), int(p))
        )
    return sub


def closed_form_computational(N, n0):
    """
    Wigner grid of |n0><n0| without touching operators.

    Nonzero only for q = 2 n0 (mod N): +1/2N on q = 2 n0 (mod 2N), and
    (-1)^p / 2N on the mirror strip q = 2 n0 + N (mod 2N).
    """
    N = check_dim(N)
    if not 0 <= n0 < N:
        raise IndexError(f"n0={n0} out of range for dimension {N}")
    q, p = np.indices((2 * N, 2 * N))
    shift = (q - 2 * n0) % (2 * N)
    on_strip = shift % N == 0
    return np.where(on_strip, (-1.0) ** ((p * (shift // N)) % 2), 0.0) / (2 * N)


def fringe_period(values, tol=1e-12):
    """
    Smallest cyclic shift s > 0 under which the sign pattern of ``values`` repeats.

    Entries with magnitude below ``tol`` count as sign 0.
    """
    values = np.asarray(values, dtype=float)
    signs = np.where(np.abs(values) < tol, 0, np.sign(values)).astype(int)
    n = signs.size
    for s in range(1, n + 1):
        if np.array_equal(np.roll(signs, -s), signs):
            return s
    return n
