"""
Structural property suites run by ``dwigner verify``.

Every property is evaluated per dimension N and reports the largest
deviation it saw; it passes when that deviation is within its tolerance.
Randomness comes from a generator seeded by (seed, property name, N), so a
property's result does not depend on which other properties ran.
"""

import math
import zlib
from dataclasses import dataclass
from typing import Callable, Dict, List

import numpy as np

from . import dynamics, grover, lines, wigner
from .linalg import (
    dft_matrix,
    hermiticity_error,
    make_computational_state,
    make_superposition,
    pure_density,
    random_density,
    random_state,
    random_unitary,
)
from .schwinger import t_displacement

SUITES = ("wigner", "lines", "dynamics", "grover")

# largest N at which each suite's per-N properties run
LINES_MAX = 8
DYNAMICS_MAX = 6
# O(N^6) and worse checks
DEFINITION_MAX = 4
GRAM_MAX = 16
TRACE_PATH_MAX = 16

GROVER_DIMS = (4, 8, 16, 32)
GROVER_BOUND_DIMS = range(4, 65)
GROVER_STEPS = 20
FRINGE_CASES = ((8, 1, 3), (16, 0, 4))
# the top-qubit sigma_z is deterministic at N = 4, nonlocal from N = 8
SIGMA_Z_DIMS = (8, 16)
PARITY_DIMS = (2, 4, 8)

DEFAULT_COUNTS = {"pairs": 100, "states": 50, "unitaries": 20, "few": 5}


@dataclass(frozen=True)
class PropertyResult:
    name: str
    N: int
    max_err: float
    passed: bool

    def line(self):
        return f"PROP {self.name} N={self.N} max_err={self.max_err:.3e} {'PASS' if self.passed else 'FAIL'}"


@dataclass(frozen=True)
class Property:
    name: str
    tol: float
    dims: Callable[[int], List[int]]
    func: Callable


REGISTRY: Dict[str, List[Property]] = {s: [] for s in SUITES}


def upto(cap=None, start=2, step=1, even=False):
    def dims(dim_max):
        top = dim_max if cap is None else min(cap, dim_max)
        return [N for N in range(start, top + 1, step) if not even or N % 2 == 0]

    return dims


def fixed(values, bounded=False):
    def dims(dim_max):
        return [N for N in values if not bounded or N <= dim_max]

    return dims


def prop(name, tol, dims):
    def register(func):
        REGISTRY[name.split(".")[0]].append(Property(name, tol, dims, func))
        return func

    return register


def _rng(seed, name, N):
    return np.random.default_rng([seed, zlib.crc32(name.encode()), N])


def _maxabs(x):
    return float(np.max(np.abs(x), initial=0.0))


# wigner


@prop("wigner.hermiticity", 1e-12, upto())
def _hermiticity(N, rng, counts):
    return max(hermiticity_error(wigner.phase_point_operator(N, q, p)) for q in range(2 * N) for p in range(2 * N))


@prop("wigner.operator_sum_identity", 1e-10, upto())
def _operator_sum(N, rng, counts):
    total = sum(wigner.phase_point_operator(N, q, p) for q in range(2 * N) for p in range(2 * N))
    return _maxabs(total - np.eye(N))


@prop("wigner.definition_agreement", 1e-12, upto(DEFINITION_MAX))
def _definition(N, rng, counts):
    return max(
        _maxabs(wigner.phase_point_operator(N, q, p, "sum") - wigner.phase_point_operator(N, q, p))
        for q in range(2 * N)
        for p in range(2 * N)
    )


@prop("wigner.independence_rank", 0, upto(GRAM_MAX))
def _independence(N, rng, counts):
    vecs = np.array([wigner.phase_point_operator(N, q, p).ravel() for q in range(N) for p in range(N)])
    gram = vecs.conj() @ vecs.T
    return abs(np.linalg.matrix_rank(gram) - N * N)


@prop("wigner.normalization", 1e-10, upto())
def _normalization(N, rng, counts):
    return max(abs(wigner.wigner_of_state(random_state(N, rng)).sum() - 1.0) for _ in range(counts["few"]))


@prop("wigner.inner_product", 1e-10, upto())
def _inner_product(N, rng, counts):
    err = 0.0
    for _ in range(counts["pairs"]):
        a, b = random_state(N, rng), random_state(N, rng)
        got = wigner.inner_product_from_grids(wigner.wigner_of_state(a), wigner.wigner_of_state(b))
        err = max(err, abs(got - abs(np.vdot(a, b)) ** 2))
    return err


@prop("wigner.round_trip", 1e-9, upto())
def _round_trip(N, rng, counts):
    err = 0.0
    for _ in range(counts["few"]):
        rho = random_density(N, rng)
        err = max(err, float(np.linalg.norm(wigner.reconstruct_density(wigner.wigner_of_density(rho)) - rho)))
    return err


@prop("wigner.fast_path_agreement", 1e-10, upto(TRACE_PATH_MAX))
def _fast_path(N, rng, counts):
    rho = random_density(N, rng)
    return _maxabs(wigner.wigner_of_density(rho, "fft") - wigner.wigner_of_density(rho, "trace"))


@prop("wigner.closed_form", 1e-12, upto())
def _closed_form(N, rng, counts):
    method = "trace" if N <= TRACE_PATH_MAX else "fft"
    return max(
        _maxabs(
            wigner.closed_form_computational(N, n0)
            - wigner.wigner_of_density(pure_density(make_computational_state(N, n0)), method)
        )
        for n0 in range(N)
    )


@prop("wigner.subgrid_relation", 1e-10, upto())
def _subgrid(N, rng, counts):
    err = 0.0
    for _ in range(counts["few"]):
        w = wigner.wigner_of_density(random_density(N, rng))
        err = max(err, _maxabs(wigner.unfold_from_fundamental(w[:N, :N]) - w))
    return err


@prop("wigner.identity_even_even", 1e-12, upto(even=True))
def _identity_even(N, rng, counts):
    q, p = np.indices((2 * N, 2 * N))
    expected = np.where((q % 2 == 0) & (p % 2 == 0), 1.0 / N, 0.0)
    return _maxabs(wigner.wigner_of_density(np.eye(N)) - expected)


@prop("wigner.identity_odd", 1e-12, upto(start=3, step=2))
def _identity_odd(N, rng, counts):
    # odd N: Tr A(q, p) = (1 + (-1)^q + (-1)^p - (-1)^(q+p)) / 4N, never 0
    q, p = np.indices((2 * N, 2 * N))
    sq, sp = (-1.0) ** q, (-1.0) ** p
    expected = (1 + sq + sp - sq * sp) / (4 * N)
    return _maxabs(wigner.wigner_of_density(np.eye(N)) - expected)


@prop("wigner.fringe_period", 0, fixed([c[0] for c in FRINGE_CASES], bounded=True))
def _fringes(N, rng, counts):
    err = 0
    for n, n0, n1 in FRINGE_CASES:
        if n != N:
            continue
        w = wigner.wigner_of_state(make_superposition(N, n0, n1))
        err = max(err, abs(wigner.fringe_period(w[n0 + n1]) - 2 * N // (n1 - n0)))
    return err


# lines


def _line_operators(N):
    all_lines, masks = lines.line_masks(N)
    A_L = np.tensordot(masks.astype(float), wigner.point_operators(N), axes=([1, 2], [0, 1]))
    return all_lines, masks, A_L


@prop("lines.projector", 1e-10, upto(LINES_MAX))
def _projector(N, rng, counts):
    _, _, A_L = _line_operators(N)
    herm = _maxabs(A_L - A_L.conj().transpose(0, 2, 1))
    idem = _maxabs(A_L @ A_L - A_L)
    return max(herm, idem)


@prop("lines.rank_rule", 1e-9, upto(LINES_MAX, even=True))
def _rank_rule(N, rng, counts):
    _, masks, A_L = _line_operators(N)
    q, p = np.indices((2 * N, 2 * N))
    even = (q % 2 == 0) & (p % 2 == 0)
    D_L = (masks & even).sum(axis=(1, 2))
    return _maxabs(np.trace(A_L, axis1=1, axis2=2).real - D_L / N)


@prop("lines.positivity", 1e-9, upto(LINES_MAX))
def _positivity(N, rng, counts):
    _, masks = lines.line_masks(N)
    grids = np.array([wigner.wigner_of_state(random_state(N, rng)) for _ in range(counts["states"])])
    sums = np.tensordot(grids, masks.astype(float), axes=([1, 2], [1, 2]))
    return max(0.0, -float(sums.min()))


@prop("lines.two_way_probability", 1e-10, upto(LINES_MAX))
def _two_way(N, rng, counts):
    _, masks, A_L = _line_operators(N)
    err = 0.0
    for _ in range(counts["few"]):
        rho = random_density(N, rng)
        w = wigner.wigner_of_density(rho)
        by_grid = np.tensordot(masks.astype(float), w, axes=([1, 2], [0, 1]))
        by_trace = np.einsum("ab,lba->l", rho, A_L).real
        err = max(err, _maxabs(by_grid - by_trace))
    return err


@prop("lines.marginals", 1e-10, upto(LINES_MAX))
def _marginals(N, rng, counts):
    F = dft_matrix(N)
    err = 0.0
    for _ in range(counts["few"]):
        rho = random_density(N, rng)
        w = wigner.wigner_of_density(rho)
        err = max(
            err,
            _maxabs(lines.marginal_position(w) - np.diag(rho).real),
            _maxabs(lines.marginal_momentum(w) - np.diag(F.conj().T @ rho @ F).real),
        )
    return err


# dynamics


@prop("dynamics.z_identity", 1e-12, upto(DYNAMICS_MAX))
def _z_identity(N, rng, counts):
    return _maxabs(dynamics.z_matrix(np.eye(N)) - np.eye(N * N))


@prop("dynamics.z_orthogonal", 1e-9, upto(DYNAMICS_MAX))
def _z_orthogonal(N, rng, counts):
    err = 0.0
    for _ in range(counts["unitaries"]):
        Z = dynamics.z_matrix(random_unitary(N, rng))
        err = max(err, _maxabs(Z @ Z.T - np.eye(N * N)))
    return err


@prop("dynamics.z_fold_consistency", 1e-9, upto(DYNAMICS_MAX))
def _z_fold(N, rng, counts):
    err = 0.0
    for _ in range(counts["few"]):
        U = random_unitary(N, rng)
        w = wigner.wigner_of_density(random_density(N, rng))
        err = max(err, _maxabs(dynamics.apply_z(dynamics.z_matrix(U), w) - dynamics.evolve_grid(w, U)))
    return err


@prop("dynamics.z_composition", 1e-9, upto(DYNAMICS_MAX))
def _z_composition(N, rng, counts):
    err = 0.0
    for _ in range(counts["few"]):
        U1, U2 = random_unitary(N, rng), random_unitary(N, rng)
        err = max(err, _maxabs(dynamics.z_matrix(U1 @ U2) - dynamics.z_matrix(U1) @ dynamics.z_matrix(U2)))
    return err


@prop("dynamics.fourier_rotation", 1e-10, upto(DYNAMICS_MAX))
def _fourier(N, rng, counts):
    err = 0.0
    for _ in range(counts["few"]):
        w = wigner.wigner_of_state(random_state(N, rng))
        for inverse in (False, True):
            U = dynamics.fourier_unitary(N, inverse)
            err = max(err, _maxabs(dynamics.evolve_grid(w, U) - dynamics.fourier_rotated(w, inverse)))
    return err


@prop("dynamics.translation_covariance", 1e-10, upto(DYNAMICS_MAX))
def _translation(N, rng, counts):
    w = wigner.wigner_of_state(random_state(N, rng))
    return max(
        _maxabs(dynamics.evolve_grid(w, t_displacement(N, m, k)) - dynamics.translated(w, m, k))
        for m in range(N)
        for k in range(N)
    )


@prop("dynamics.reflection_covariance", 1e-10, upto(DYNAMICS_MAX))
def _reflection(N, rng, counts):
    err = 0.0
    for _ in range(counts["few"]):
        w = wigner.wigner_of_state(random_state(N, rng))
        alpha0 = tuple(int(x) for x in rng.integers(0, 2 * N, size=2))
        R = dynamics.reflection_unitary(N, alpha0)
        err = max(err, _maxabs(dynamics.evolve_grid(w, R) - dynamics.reflected(w, alpha0)))
    return err


@prop("dynamics.deterministic_examples", 0, upto(DYNAMICS_MAX))
def _deterministic(N, rng, counts):
    """Count of named deterministic maps that fail to classify as such."""
    bad = 0
    pts = [(q, p) for q in range(N) for p in range(N)]
    for m, k in pts:
        c = dynamics.classify_map(dynamics.z_matrix(t_displacement(N, m, k)))
        ok = c.deterministic and all(c.source[(q, p)] == ((q - 2 * m) % N, (p - 2 * k) % N) for q, p in pts)
        bad += not ok
    for q0, p0 in pts:
        c = dynamics.classify_map(dynamics.z_matrix(dynamics.reflection_unitary(N, (q0, p0))))
        ok = c.deterministic and all(c.source[(q, p)] == ((2 * q0 - q) % N, (2 * p0 - p) % N) for q, p in pts)
        bad += not ok
    for inverse in (False, True):
        bad += not dynamics.classify_map(dynamics.z_matrix(dynamics.fourier_unitary(N, inverse))).deterministic
    return bad


@prop("dynamics.sigma_z_nonlocal", 1e-12, fixed(SIGMA_Z_DIMS, bounded=True))
def _sigma_z(N, rng, counts):
    """sigma_z on the top qubit: nonlocal, row 0 equal to 4/N on (0, even p) minus 1 at the origin."""
    Z = dynamics.z_matrix(dynamics.pauli_z(N, N.bit_length() - 2))
    if dynamics.classify_map(Z).deterministic:
        return 1.0
    expected = np.zeros(N * N)
    expected[0:N:2] = 4.0 / N
    expected[0] -= 1.0
    return _maxabs(Z[0] - expected)


@prop("dynamics.sigma_z_parity_translation", 1e-12, fixed(PARITY_DIMS, bounded=True))
def _sigma_z_parity(N, rng, counts):
    """sigma_z on the parity qubit equals V^(N/2) and is a deterministic map."""
    U = dynamics.pauli_z(N, 0)
    return int(not dynamics.classify_map(dynamics.z_matrix(U)).deterministic) + _maxabs(
        U - t_displacement(N, 0, N // 2)
    )


# grover


def _grover_traj(N, marked, k0, iterations, grids=False):
    cfg = grover.GroverConfig(qubits=N.bit_length() - 1, marked=marked, k0=k0, iterations=iterations)
    return grover.run_grover(cfg, grids=grids)


@prop("grover.norm", 1e-12, fixed(GROVER_DIMS))
def _grover_norm(N, rng, counts):
    traj = _grover_traj(N, int(rng.integers(N)), int(rng.integers(N)), GROVER_STEPS)
    return max(abs(np.linalg.norm(s) - 1.0) for s in traj.states)


@prop("grover.closed_form", 1e-9, fixed(GROVER_DIMS))
def _grover_closed(N, rng, counts):
    traj = _grover_traj(N, int(rng.integers(N)), int(rng.integers(N)), GROVER_STEPS)
    return max(abs(p - grover.success_closed_form(N, t)) for t, p in enumerate(traj.success_prob))


@prop("grover.optimal_bound", 0, fixed(GROVER_BOUND_DIMS))
def _grover_bound(N, rng, counts):
    # direct simulation works for any N, not only powers of two
    marked, k0 = int(rng.integers(N)), int(rng.integers(N))
    step = grover.grover_diffusion(N, k0) @ grover.grover_oracle(N, marked)
    psi = np.exp(2j * np.pi * np.arange(N) * k0 / N) / math.sqrt(N)
    for _ in range(grover.optimal_iterations(N)):
        psi = step @ psi
    return max(0.0, (1.0 - 1.0 / N) - abs(psi[marked]) ** 2)


@prop("grover.marginal_weight", 1e-9, fixed(GROVER_DIMS))
def _grover_marginal(N, rng, counts):
    marked = int(rng.integers(N))
    traj = _grover_traj(N, marked, 1, grover.optimal_iterations(N), grids=True)
    return max(abs(lines.marginal_position(w)[marked] - p) for w, p in zip(traj.grids, traj.success_prob))


@prop("grover.k0_independence", 1e-9, fixed(GROVER_DIMS))
def _grover_k0(N, rng, counts):
    marked = int(rng.integers(N))
    runs = [np.array(_grover_traj(N, marked, k0, 8).success_prob) for k0 in range(N)]
    return max(_maxabs(r - runs[0]) for r in runs)


def property_names(suite="all"):
    suites = SUITES if suite == "all" else (suite,)
    return [p.name for s in suites for p in REGISTRY[s]]


def run(suite="all", dim_max=8, seed=0, samples=None):
    """Evaluate the selected suites and return one result per (property, N)."""
    if suite != "all" and suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}")
    counts = dict(DEFAULT_COUNTS)
    if samples is not None:
        if samples < 1:
            raise ValueError("samples must be positive")
        counts.update(pairs=samples, states=samples, unitaries=samples, few=min(samples, DEFAULT_COUNTS["few"]))
    results = []
    for s in SUITES if suite == "all" else (suite,):
        for p in REGISTRY[s]:
            for N in p.dims(dim_max):
                err = float(p.func(N, _rng(seed, p.name, N), counts))
                results.append(PropertyResult(p.name, N, err, err <= p.tol))
    return results


def format_report(results):
    return "".join(r.line() + "\n" for r in results)
