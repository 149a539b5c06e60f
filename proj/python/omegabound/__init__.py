"""Prime-factor counting, factorial valuations and explicit-bound verification."""

from ._core import (
    CatalogError,
    CheckpointError,
    DomainError,
    FactorSieve,
    ModeError,
    PrimeSums,
    ResourceError,
    big_omega,
    bound_ids,
    build_spf,
    evaluate_series,
    f_ratio,
    generalized_valuation,
    hardy_ramanujan_main,
    inverse_gamma,
    inverse_log_sum_estimate,
    inverse_log_sum_refined_lower,
    inverse_log_sum_refined_upper,
    legendre_valuation,
    log_gamma,
    main_theorem_band,
    omega_gamma_band,
    omega_prefix_sum,
    pi_upper_bound,
    prime_sums,
    r_envelope,
    reciprocal_sum_band,
    reciprocal_sum_refined_lower,
    reciprocal_sum_refined_upper,
    scan,
    theta_error_envelopes,
    threshold_check,
    upsilon,
    vp_bounds,
)

__version__ = "0.1.0"
