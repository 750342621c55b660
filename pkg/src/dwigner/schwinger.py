"""
Finite translation operators U (position shift), V (momentum kick) and the
symmetrized displacement T(m, k) = U^m V^k exp(i pi m k / N).

U and V only depend on their exponent mod N, but the phase of T has period
2N in each argument, so T is indexed on the doubled range [0, 2N).
"""

import numpy as np

from .linalg import check_dim


def delta_mod(x, M):
    """1 if x == 0 (mod M), else 0."""
    if M < 1:
        raise ValueError(f"modulus must be positive, got {M}")
    return int(x % M == 0)


def u_power(N, m):
    """Cyclic shift U^m |n> = |n + m mod N>."""
    N = check_dim(N)
    n = np.arange(N)
    out = np.zeros((N, N), dtype=complex)
    out[(n + m) % N, n] = 1.0
    return out


def v_power(N, k):
    """Diagonal phase V^k |n> = exp(i 2 pi k n / N) |n>."""
    N = check_dim(N)
    n = np.arange(N)
    return np.diag(np.exp(2j * np.pi * ((k * n) % N) / N))


def t_displacement(N, m, k):
    N = check_dim(N)
    m %= 2 * N
    k %= 2 * N
    # U^m V^k is monomial: column n carries exp(i 2 pi k n / N) into row n + m
    n = np.arange(N)
    out = np.zeros((N, N), dtype=complex)
    out[(n + m) % N, n] = np.exp(2j * np.pi * ((k * n) % N) / N)
    return out * np.exp(1j * np.pi * ((m * k) % (2 * N)) / N)
