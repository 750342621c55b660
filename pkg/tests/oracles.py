"""
Brute-force reference computations, written independently of the package.

Everything here follows the defining formulas literally with explicit
loops and matrix powers; it is slow and only meant for small N.
"""

import functools
import math

import numpy as np


def shift_matrix(N):
    U = np.zeros((N, N), dtype=complex)
    for n in range(N):
        U[(n + 1) % N, n] = 1
    return U


def clock_matrix(N):
    return np.diag([np.exp(2j * np.pi * n / N) for n in range(N)])


def T(N, m, k):
    U = np.linalg.matrix_power(shift_matrix(N), m)
    V = np.linalg.matrix_power(clock_matrix(N), k)
    return U @ V * np.exp(1j * np.pi * m * k / N)


@functools.lru_cache(maxsize=None)
def A(N, q, p):
    M = 2 * N
    out = np.zeros((N, N), dtype=complex)
    for lam in range(M):
        for lamp in range(M):
            out += T(N, lam, lamp) * np.exp(-2j * np.pi * (lamp * q - lam * p) / M)
    out /= M * M
    out.flags.writeable = False
    return out


def wigner(rho):
    N = rho.shape[0]
    W = np.empty((2 * N, 2 * N))
    for q in range(2 * N):
        for p in range(2 * N):
            W[q, p] = np.trace(rho @ A(N, q, p)).real
    return W


def z_matrix(U):
    N = U.shape[0]
    pts = [(q, p) for q in range(N) for p in range(N)]
    Ud = U.conj().T
    return np.array([[4 * N * np.trace(A(N, *a) @ U @ A(N, *b) @ Ud).real for b in pts] for a in pts])


def grover_success(N, marked, k0, t):
    """Direct state-vector simulation with explicit reflections."""
    k = np.array([np.exp(2j * np.pi * n * k0 / N) for n in range(N)]) / math.sqrt(N)
    psi = k.copy()
    for _ in range(t):
        psi[marked] *= -1
        psi = 2 * k * np.vdot(k, psi) - psi
    return abs(psi[marked]) ** 2
