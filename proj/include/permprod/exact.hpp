#pragma once

#include "permprod/profile.hpp"

namespace permprod {

/// Number of matching pairs realizing `profile`, times the probability
/// that all their edges are present: the product T1 * ... * T11 with the
/// pair-distinctness of T6 handled exactly. Throws on an infeasible
/// profile, naming the violated constraint. `approx_t6` switches to the
/// squared-falling-factorial approximation of T6 (test-only fault
/// injection; breaks exactness whenever Z >= 1).
ExactScalar term_product(const Profile& profile, const EnsembleParams& params,
                         bool approx_t6 = false);

/// E(perm_m) in the Bernoulli ensemble: C(n,m)^2 m! p^m.
ExactScalar exact_single(unsigned n, unsigned m, unsigned r);

/// E(perm_m perm_m') via the profile sum.
ExactScalar exact_product(unsigned n, unsigned m, unsigned m_prime, unsigned r,
                          bool approx_t6 = false);

}  // namespace permprod
