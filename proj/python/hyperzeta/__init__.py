"""Barnes multiple zeta, hypermultiple gamma and balanced functions."""

from ._core import (
    DomainError,
    FitUnstable,
    HyperzetaError,
    PrecisionError,
    asym,
    balanced_P,
    bernoulli_a,
    coeff_c,
    gen_F,
    log_hyper_gamma,
    multi_harmonic,
    p0_closed_form,
    q_poly,
    run_checks,
    s_poly,
    zeta,
    zeta_direct,
)

__all__ = [
    "DomainError",
    "FitUnstable",
    "HyperzetaError",
    "PrecisionError",
    "asym",
    "balanced_P",
    "bernoulli_a",
    "coeff_c",
    "gen_F",
    "log_hyper_gamma",
    "multi_harmonic",
    "p0_closed_form",
    "q_poly",
    "run_checks",
    "s_poly",
    "zeta",
    "zeta_direct",
]
__version__ = "0.1.0"
