"""
Lines on the doubled grid and the projectors obtained by summing point
operators along them.

A line L(n1, n2, n3) is the point set {(q, p) : n1 q + n2 p = n3 (mod 2N)}.
Summing A(q, p) over a line gives a projector whose trace, for even N, is
D_L / N with D_L the number of points on L having both coordinates even.
"""

from dataclasses import dataclass
from typing import NamedTuple, Optional

import numpy as np

from .errors import MarginalError, ProjectorError
from .linalg import ZERO_TOL, check_dim, hermiticity_error
from .wigner import grid_dim, phase_point_operator

PROB_TOL = 1e-9


class Line(NamedTuple):
    n1: int
    n2: int
    n3: int

    def is_parallel(self, other):
        return (self.n1, self.n2) == (other.n1, other.n2)


@dataclass(frozen=True)
class LineSumResult:
    line: Line
    projector: np.ndarray
    d_L: float
    D_L: int
    #: Tr(rho A_L) when a state was supplied
    value: Optional[float] = None

    @property
    def rank_rule(self):
        """D_L / N, the rank predicted from the even-even point count."""
        return self.D_L / self.projector.shape[0]


def make_line(N, n1, n2, n3):
    M = 2 * check_dim(N)
    line = Line(n1 % M, n2 % M, n3 % M)
    if line.n1 == 0 and line.n2 == 0:
        raise ValueError(f"line needs (n1, n2) != (0, 0) mod {M}, got ({n1}, {n2})")
    return line


def all_lines(N):
    M = 2 * check_dim(N)
    return [Line(n1, n2, n3) for n1 in range(M) for n2 in range(M) if n1 or n2 for n3 in range(M)]


def line_mask(N, line):
    line = make_line(N, *line)
    q, p = np.indices((2 * N, 2 * N))
    return (line.n1 * q + line.n2 * p - line.n3) % (2 * N) == 0


def line_masks(N, lines=None):
    """Boolean (len(lines), 2N, 2N) stack of line memberships."""
    lines = all_lines(N) if lines is None else [make_line(N, *L) for L in lines]
    M = 2 * N
    coef = np.array(lines, dtype=np.int64).reshape(-1, 3)
    q, p = np.indices((M, M))
    vals = coef[:, 0, None, None] * q + coef[:, 1, None, None] * p - coef[:, 2, None, None]
    return lines, vals % M == 0


def line_points(N, line):
    """Points of the line in lexicographic (q, p) order."""
    return [(int(q), int(p)) for q, p in np.argwhere(line_mask(N, line))]


def sum_wigner_on_line(w, line):
    N = grid_dim(w)
    return float(np.sum(np.asarray(w)[line_mask(N, line)]))


def line_projector(N, line, rho=None):
    """
    A_L = sum of A(q, p) over the line, checked to be a Hermitian projector.

    For even N the trace must equal D_L / N; for odd N the rank rule is only
    reported (through ``LineSumResult.rank_rule``).
    """
    N = check_dim(N)
    line = make_line(N, *line)
    pts = line_points(N, line)
    A_L = np.zeros((N, N), dtype=complex)
    for q, p in pts:
        A_L += phase_point_operator(N, q, p)
    herm = hermiticity_error(A_L)
    idem = float(np.max(np.abs(A_L @ A_L - A_L)))
    if herm > ZERO_TOL or idem > ZERO_TOL:
        raise ProjectorError(f"{line}: A_L not a projector (hermiticity {herm:.3e}, idempotence {idem:.3e})")
    d_L = float(np.trace(A_L).real)
    D_L = sum(1 for q, p in pts if q % 2 == 0 and p % 2 == 0)
    if N % 2 == 0 and abs(d_L - D_L / N) > PROB_TOL:
        raise ProjectorError(f"{line}: Tr A_L = {d_L:.12g} but D_L / N = {D_L}/{N}")
    value = None if rho is None else float(np.trace(np.asarray(rho) @ A_L).real)
    return LineSumResult(line, A_L, d_L, D_L, value)


def _marginal(sums, odd, what, tol):
    if odd.size and np.max(np.abs(odd)) > tol:
        raise MarginalError(f"odd {what} line sum {np.max(np.abs(odd)):.3e} should vanish")
    if np.min(sums) < -tol:
        raise MarginalError(f"negative {what} probability {np.min(sums):.3e}")
    if abs(np.sum(sums) - 1.0) > tol:
        raise MarginalError(f"{what} marginal sums to {np.sum(sums):.12g}, not 1")
    return sums


def marginal_position(w, tol=PROB_TOL):
    """Probabilities of |n>: sums of W along the vertical lines q = 2n."""
    cols = np.asarray(w, dtype=float).sum(axis=1)
    return _marginal(cols[0::2], cols[1::2], "position", tol)


def marginal_momentum(w, tol=PROB_TOL):
    """Probabilities of |k>: sums of W along the horizontal lines p = 2k."""
    rows = np.asarray(w, dtype=float).sum(axis=0)
    return _marginal(rows[0::2], rows[1::2], "momentum", tol)
