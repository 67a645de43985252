"""Berezin-Toeplitz spectra on the sphere and their complex Bohr-Sommerfeld approximations."""

from ._btq import (
    Error,
    action_derivative,
    action_integral,
    bs_solve,
    bs_spectrum,
    compare_spectra,
    convergence_study,
    eigenvalues,
    match_spectra,
    matrix_eigenvalues,
    operator_matrix,
    power_norm,
    resolvent_norm,
    run_cli,
    toeplitz_matrix,
    toeplitz_quadrature_oracle,
)

__all__ = [
    "Error",
    "action_derivative",
    "action_integral",
    "bs_solve",
    "bs_spectrum",
    "compare_spectra",
    "convergence_study",
    "eigenvalues",
    "match_spectra",
    "matrix_eigenvalues",
    "operator_matrix",
    "power_norm",
    "resolvent_norm",
    "run_cli",
    "toeplitz_matrix",
    "toeplitz_quadrature_oracle",
]
