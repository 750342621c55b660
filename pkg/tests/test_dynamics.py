import numpy as np
import pytest

import oracles
from dwigner import dynamics
from dwigner.errors import NotUnitaryError
from dwigner.linalg import (
    make_computational_state,
    make_momentum_state,
    random_density,
    random_state,
    random_unitary,
)
from dwigner.schwinger import t_displacement
from dwigner.wigner import fold_to_fundamental, wigner_of_density, wigner_of_state


@pytest.mark.parametrize("N", [2, 3, 4])
def test_z_matches_oracle(N, rng):
    U = random_unitary(N, rng)
    np.testing.assert_allclose(dynamics.z_matrix(U), oracles.z_matrix(U), atol=1e-11)


@pytest.mark.parametrize("N", range(1, 9))
def test_z_of_identity(N):
    # regression guard on the 4N normalisation
    assert dynamics.z_scale(N) == 4 * N
    np.testing.assert_allclose(dynamics.z_matrix(np.eye(N)), np.eye(N * N), atol=1e-12)


@pytest.mark.parametrize("N", range(2, 7))
def test_z_real_orthogonal(N, rng):
    for _ in range(5):
        Z = dynamics.z_matrix(random_unitary(N, rng))
        assert Z.dtype == float
        assert np.max(np.abs(Z @ Z.T - np.eye(N * N))) < 1e-10


@pytest.mark.parametrize("method", ["trace", "fft"])
def test_z_paths_agree(method, rng):
    U = random_unitary(5, rng)
    np.testing.assert_allclose(dynamics.z_matrix(U, method), dynamics.z_matrix(U, "trace"), atol=1e-12)


@pytest.mark.parametrize("N", range(2, 7))
def test_z_composition(N, rng):
    U1, U2 = random_unitary(N, rng), random_unitary(N, rng)
    Z12 = dynamics.z_matrix(U2 @ U1)
    assert np.max(np.abs(Z12 - dynamics.z_matrix(U2) @ dynamics.z_matrix(U1))) < 1e-10


@pytest.mark.parametrize("N", range(2, 7))
def test_z_propagates_subgrid(N, rng):
    U = random_unitary(N, rng)
    rho = random_density(N, rng)
    w = wigner_of_density(rho)
    w2 = wigner_of_density(U @ rho @ U.conj().T)
    sub = dynamics.z_matrix(U) @ fold_to_fundamental(w).ravel()
    np.testing.assert_allclose(sub.reshape(N, N), w2[:N, :N], atol=1e-10)
    np.testing.assert_allclose(dynamics.apply_z(dynamics.z_matrix(U), w), w2, atol=1e-10)


def test_z_rejects_non_unitary():
    with pytest.raises(NotUnitaryError):
        dynamics.z_matrix(np.array([[1, 1], [0, 1]]))


def test_point_index_round_trip():
    for a in range(16):
        assert dynamics.point_index(4, dynamics.index_point(4, a)) == a
    assert dynamics.point_index(4, (5, 6)) == 1 * 4 + 2


@pytest.mark.parametrize("N, m, k", [(2, 1, 0), (3, 1, 2), (4, 2, 3), (5, 4, 1)])
def test_translation_is_deterministic(N, m, k):
    cls = dynamics.classify_map(dynamics.z_matrix(t_displacement(N, m, k)))
    assert cls.deterministic
    assert cls.source[(0, 0)] == ((-2 * m) % N, (-2 * k) % N)


@pytest.mark.parametrize("N", [2, 3, 4, 6])
def test_fourier_and_reflection_are_deterministic(N):
    assert dynamics.classify_map(dynamics.z_matrix(dynamics.fourier_unitary(N))).deterministic
    assert dynamics.classify_map(dynamics.z_matrix(dynamics.reflection_unitary(N, (1, 2)))).deterministic


def test_random_unitary_is_nonlocal(rng):
    cls = dynamics.classify_map(dynamics.z_matrix(random_unitary(4, rng)))
    assert cls.kind == "nonlocal" and not cls.deterministic and cls.source == {}


def test_classify_rejects_non_unit_entries():
    Z = np.eye(4) * 0.5
    assert dynamics.classify_map(Z).kind == "nonlocal"


@pytest.mark.parametrize("N", [8, 16])
def test_sigma_z_top_bit_nonlocal(N):
    Z = dynamics.z_matrix(dynamics.pauli_z(N, N.bit_length() - 2))
    assert dynamics.classify_map(Z, 1e-6).kind == "nonlocal"
    # first row: 4/N on (0, even p), less 1 at the origin
    expected = np.zeros(N * N)
    expected[[dynamics.point_index(N, (0, p)) for p in range(0, N, 2)]] = 4 / N
    expected[0] -= 1
    np.testing.assert_allclose(Z[0], expected, atol=1e-12)


def test_sigma_z_top_bit_n4_is_deterministic():
    assert dynamics.classify_map(dynamics.z_matrix(dynamics.pauli_z(4, 1))).deterministic


@pytest.mark.parametrize("N", [2, 4, 8, 16])
def test_sigma_z_parity_bit_is_translation(N):
    np.testing.assert_allclose(dynamics.pauli_z(N, 0), t_displacement(N, 0, N // 2), atol=1e-12)
    w = wigner_of_state(random_state(N, np.random.default_rng(N)))
    assert dynamics.check_translation_covariance(w, 0, N // 2)


def test_pauli_z_validation():
    with pytest.raises(ValueError):
        dynamics.pauli_z(6, 0)
    with pytest.raises(IndexError):
        dynamics.pauli_z(8, 3)


@pytest.mark.parametrize("N", [2, 3, 5, 8])
def test_fourier_directions(N, rng):
    w = wigner_of_state(random_state(N, rng))
    assert dynamics.check_fourier_rotation(w)
    assert dynamics.check_fourier_rotation(w, inverse=True)
    # four quarter turns come back
    w4 = w
    for _ in range(4):
        w4 = dynamics.evolve_grid(w4, dynamics.fourier_unitary(N))
    np.testing.assert_allclose(w4, w, atol=1e-10)


def test_fourier_maps_position_to_momentum():
    # F|n> = |k = n>, so a vertical strip becomes a horizontal one
    w = wigner_of_state(make_computational_state(4, 1))
    wk = wigner_of_state(make_momentum_state(4, 1))
    np.testing.assert_allclose(dynamics.evolve_grid(w, dynamics.fourier_unitary(4)), wk, atol=1e-12)
    np.testing.assert_allclose(dynamics.fourier_rotated(w), wk, atol=1e-12)


def test_translation_example():
    w = wigner_of_state(make_computational_state(2, 0))
    w2 = dynamics.evolve_grid(w, t_displacement(2, 1, 0))
    np.testing.assert_allclose(w2, wigner_of_state(make_computational_state(2, 1)), atol=1e-12)
    np.testing.assert_allclose(w2, dynamics.translated(w, 1, 0), atol=1e-12)


@pytest.mark.parametrize("N", [2, 3, 4, 6])
def test_translation_and_reflection_covariance(N, rng):
    w = wigner_of_density(random_density(N, rng))
    for m, k in [(0, 1), (1, 0), (N - 1, 2), (3, 5)]:
        assert dynamics.check_translation_covariance(w, m, k)
    for alpha0 in [(0, 0), (1, 0), (2 * N - 1, 3)]:
        assert dynamics.check_reflection(w, alpha0)


def test_reflection_unitary_for_all_points():
    N = 3
    for q in range(2 * N):
        for p in range(2 * N):
            R = dynamics.reflection_unitary(N, (q, p))
            assert np.max(np.abs(R @ R.conj().T - np.eye(N))) < 1e-12


def test_evolve_grid_shape_check():
    with pytest.raises(ValueError):
        dynamics.evolve_grid(np.zeros((4, 4)), np.eye(3))


@pytest.mark.parametrize("bit", [0, 1])
def test_sigma_z_row_structure_n4_literal(bit):
    # stated structure: Z[0, beta] = 2/N on beta = (0, even p); at N = 4 neither qubit reaches it
    N = 4
    Z = dynamics.z_matrix(dynamics.pauli_z(N, bit))
    support = [dynamics.point_index(N, (0, p)) for p in range(0, N, 2)]
    np.testing.assert_allclose(Z[0, support], 2 / N, atol=1e-12)
