"""Discrete Wigner functions on the 2N x 2N phase-space grid."""

from .dynamics import (
    MapClassification,
    check_fourier_rotation,
    check_reflection,
    check_translation_covariance,
    classify_map,
    evolve_grid,
    z_matrix,
)
from .grover import GroverConfig, GroverTrajectory, optimal_iterations, run_grover
from .lines import Line, LineSumResult, line_points, line_projector, marginal_momentum, marginal_position
from .linalg import dft_matrix, make_computational_state, make_momentum_state, make_superposition, pure_density
from .schwinger import delta_mod, t_displacement, u_power, v_power
from .wigner import (
    closed_form_computational,
    fold_to_fundamental,
    inner_product_from_grids,
    phase_point_operator,
    reconstruct_density,
    wigner_of_density,
    wigner_of_state,
)

__version__ = "0.1.0"
