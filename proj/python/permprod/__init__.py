"""Permanental-minor expectations in the Bernoulli 0-1 matrix ensemble.

Exact finite-n expectations (as rational strings), brute-force oracles,
and asymptotic rate-function maximization.
"""

try:
    from ._permprod import (  # installed wheel layout
        brute_product, brute_single, count_matchings, count_profiles,
        exact_product, exact_single, ls_rs, mc_estimate_single,
        rate_product, rate_single, sweep_r, t6_exact,
    )
except ImportError:  # in-tree CMake build on PYTHONPATH
    from _permprod import (
        brute_product, brute_single, count_matchings, count_profiles,
        exact_product, exact_single, ls_rs, mc_estimate_single,
        rate_product, rate_single, sweep_r, t6_exact,
    )

__all__ = [
    "brute_product",
    "brute_single",
    "count_matchings",
    "count_profiles",
    "exact_product",
    "exact_single",
    "ls_rs",
    "mc_estimate_single",
    "rate_product",
    "rate_single",
    "sweep_r",
    "t6_exact",
]
