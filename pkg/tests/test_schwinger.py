import numpy as np
import pytest

import oracles
from dwigner.linalg import dft_matrix
from dwigner.schwinger import delta_mod, t_displacement, u_power, v_power


@pytest.mark.parametrize("x, M, expected", [(0, 5, 1), (32, 32, 1), (33, 32, 0), (-4, 2, 1), (7, 1, 1)])
def test_delta_mod(x, M, expected):
    assert delta_mod(x, M) == expected


def test_delta_mod_bad_modulus():
    with pytest.raises(ValueError):
        delta_mod(3, 0)


def test_u_v_small():
    np.testing.assert_array_equal(u_power(2, 1), [[0, 1], [1, 0]])
    np.testing.assert_allclose(v_power(2, 1), np.diag([1, -1]), atol=1e-15)
    np.testing.assert_array_equal(u_power(5, 0), np.eye(5))
    np.testing.assert_array_equal(v_power(5, 0), np.eye(5))


def test_u_periodic():
    U1 = oracles.shift_matrix(3)
    np.testing.assert_array_equal(u_power(3, 4), U1)
    np.testing.assert_array_equal(u_power(3, 4), u_power(3, 1))


@pytest.mark.parametrize("N", [2, 3, 5, 8])
def test_u_shifts_basis(N):
    for m in range(-N, 2 * N):
        Um = u_power(N, m)
        for n in range(N):
            assert Um[(n + m) % N, n] == 1


@pytest.mark.parametrize("N", range(1, 33))
def test_commutation_and_periodicity(N):
    U, V = u_power(N, 1), v_power(N, 1)
    assert np.max(np.abs(U @ V - V @ U * np.exp(-2j * np.pi / N))) < 1e-12
    assert np.max(np.abs(np.linalg.matrix_power(U, N) - np.eye(N))) < 1e-12
    assert np.max(np.abs(np.linalg.matrix_power(V, N) - np.eye(N))) < 1e-12


@pytest.mark.parametrize("N", [2, 3, 4, 7, 16])
def test_u_diagonal_in_momentum_basis(N):
    F = dft_matrix(N)
    D = F.conj().T @ u_power(N, 1) @ F
    k = np.arange(N)
    np.testing.assert_allclose(D, np.diag(np.exp(-2j * np.pi * k / N)), atol=1e-12)


def test_t_identity_and_pauli_y():
    np.testing.assert_array_equal(t_displacement(4, 0, 0), np.eye(4))
    # X Z exp(i pi / 2) for N = 2
    expected = np.array([[0, 1], [1, 0]]) @ np.diag([1, -1]) * 1j
    np.testing.assert_allclose(t_displacement(2, 1, 1), expected, atol=1e-15)


@pytest.mark.parametrize("N", range(1, 9))
def test_t_matches_oracle_and_is_unitary(N):
    for m in range(2 * N):
        for k in range(2 * N):
            T = t_displacement(N, m, k)
            np.testing.assert_allclose(T, oracles.T(N, m, k), atol=1e-12)
            assert np.max(np.abs(T @ T.conj().T - np.eye(N))) < 1e-12


@pytest.mark.parametrize("N", [2, 3, 6])
def test_t_doubled_period(N):
    # period 2N in each argument, and T(m + N, k) differs from T(m, k) by a phase only
    for m, k in [(1, 1), (2, 3), (N - 1, 1)]:
        np.testing.assert_allclose(t_displacement(N, m + 2 * N, k), t_displacement(N, m, k), atol=1e-12)
        ratio = t_displacement(N, m + N, k) @ t_displacement(N, m, k).conj().T
        np.testing.assert_allclose(ratio, ratio[0, 0] * np.eye(N), atol=1e-12)
