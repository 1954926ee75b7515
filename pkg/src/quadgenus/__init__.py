"""Genus bounds for curves on the smooth quadric threefold lying on a surface of degree 2k."""

from quadgenus.bounds import (
    BoundReport,
    LinkageDescriptor,
    Sharpness,
    bound_no_small_curve,
    capital_pi,
    genus_bound,
    linkage_descriptor,
    pi,
    sharpness,
    xi,
)
from quadgenus.errors import BudgetExceededError, DomainError, InadmissibleError, RegimeError
from quadgenus.extremal import (
    TemplateReport,
    build_hat_gamma,
    build_tilde_gamma_large,
    build_tilde_gamma_small,
    build_tilde_gamma_theta_k,
    improve,
)
from quadgenus.gamma import (
    ConstraintProfile,
    GammaSequence,
    beta_from_gamma,
    genus_functional,
    indices,
    is_admissible,
    large_profile,
    small_profile,
    theta_k_profile,
)
from quadgenus.invariants import (
    CurveParams,
    InvariantSet,
    Regime,
    invariants,
    n0_and_eps,
    nu_decomposition,
    regime,
    theta0_and_eps_prime,
)
from quadgenus.oracle import OracleResult, enumerate_admissible, oracle_max, verify

__all__ = [name for name in dir() if not name.startswith("_")]
