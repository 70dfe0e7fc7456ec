"""PT-symmetric two-state oscillations."""

from ._core import (
    DomainError,
    EigenSystem,
    MassSpectrum,
    ModelParams,
    __version__,
    cardioid_r,
    cardioid_ratio,
    cprime_matrix,
    density_operator,
    dirac_norm,
    dirac_norm_closed_form,
    dirac_overlap,
    dirac_overlap_closed_form,
    eigensystem,
    flavour_ket,
    hermitian_mass_eigenvalues,
    hermitian_mass_matrix,
    hermitian_tachyon_eta,
    make_params,
    mass_matrix,
    mass_spectrum,
    oracle_probability,
    params_from_eta,
    parity_matrix,
    probability,
    run_cli,
    transition_closed_form,
    transition_hermitian,
    transition_naive_continuation,
    validate,
)


def error_kind(exc):
    """Kind string ("ExceptionalPoint", "BrokenPTPhase", ...) of a DomainError."""
    return exc.args[0]
