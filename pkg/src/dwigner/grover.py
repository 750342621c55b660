"""
Grover search started from a momentum eigenstate, with its phase-space
trajectory.

The diffusion step reflects about the initial momentum state |k0>, so the
iteration D O rotates inside span{|n_w>, |k0>} exactly as the textbook
algorithm does from the uniform superposition (|<n_w|k0>| = 1/sqrt(N) for
every k0).
"""

import math
from dataclasses import dataclass, field
from typing import List, Optional

import numpy as np

from .linalg import check_dim, make_momentum_state
from .wigner import wigner_of_state


def grover_oracle(N, marked):
    """I - 2 |marked><marked|."""
    N = check_dim(N)
    if not 0 <= marked < N:
        raise IndexError(f"marked item {marked} out of range for N={N}")
    O = np.eye(N, dtype=complex)
    O[marked, marked] = -1.0
    return O


def grover_diffusion(N, k0):
    """2 |k0><k0| - I for the momentum state |k0>."""
    k = make_momentum_state(N, k0)
    return 2.0 * np.outer(k, k.conj()) - np.eye(N)


def rotation_angle(N):
    return 2.0 * math.asin(1.0 / math.sqrt(N))


def success_closed_form(N, t):
    """sin^2((2t + 1) theta / 2) with theta = 2 arcsin(1 / sqrt(N))."""
    return math.sin((2 * t + 1) * rotation_angle(N) / 2.0) ** 2


def iteration_estimate(N):
    """The usual pi sqrt(N) / 4 estimate of the iteration count (4.44 for N = 32)."""
    return math.pi * math.sqrt(N) / 4.0


def optimal_iterations(N):
    """
    Exact number of iterations t >= 1 maximising the success probability
    before the state first rotates past the marked item.

    The search covers t with (2t + 1) theta / 2 <= pi, i.e. the first peak;
    later, longer runs can come marginally closer to 1.  Ties resolve to the
    smallest t.
    """
    N = check_dim(N)
    if N < 2:
        raise ValueError("Grover search needs N >= 2")
    horizon = max(1, math.floor(math.pi / rotation_angle(N) - 0.5))
    probs = [round(success_closed_form(N, t), 12) for t in range(1, horizon + 1)]
    return 1 + int(np.argmax(probs))


@dataclass(frozen=True)
class GroverConfig:
    qubits: int
    marked: int
    k0: int = 1
    #: defaults to round(pi sqrt(N) / 4)
    iterations: Optional[int] = None

    def __post_init__(self):
        if self.qubits < 1:
            raise ValueError(f"need at least one qubit, got {self.qubits}")
        N = check_dim(self.N)
        if not 0 <= self.marked < N:
            raise IndexError(f"marked item {self.marked} out of range for N={N}")
        if not 0 <= self.k0 < N:
            raise IndexError(f"k0={self.k0} out of range for N={N}")
        if self.iterations is None:
            object.__setattr__(self, "iterations", max(1, round(iteration_estimate(N))))
        if self.iterations < 1:
            raise ValueError(f"iterations must be positive, got {self.iterations}")

    @property
    def N(self):
        return 2**self.qubits


@dataclass
class GroverTrajectory:
    config: GroverConfig
    states: List[np.ndarray] = field(default_factory=list)
    grids: List[np.ndarray] = field(default_factory=list)
    success_prob: List[float] = field(default_factory=list)
    #: W(2 n_w, 2 k0) per step, recorded for inspection only
    fixed_point_values: List[float] = field(default_factory=list)


def run_grover(cfg, grids=True):
    """Iterate psi_{t+1} = D O psi_t from psi_0 = |k0>, recording every step."""
    N = cfg.N
    O = grover_oracle(N, cfg.marked)
    D = grover_diffusion(N, cfg.k0)
    step = D @ O
    traj = GroverTrajectory(cfg)
    psi = make_momentum_state(N, cfg.k0)
    for t in range(cfg.iterations + 1):
        if t:
            psi = step @ psi
        traj.states.append(psi)
        traj.success_prob.append(float(abs(psi[cfg.marked]) ** 2))
        if grids:
            w = wigner_of_state(psi)
            traj.grids.append(w)
            traj.fixed_point_values.append(float(w[2 * cfg.marked, 2 * cfg.k0]))
    return traj
