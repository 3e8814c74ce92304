#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <vector>

namespace permprod {

using ExactInt = boost::multiprecision::cpp_int;
// All finite-n expectations and counts are exact rationals; no rounding
// happens anywhere on this path.
using ExactScalar = boost::multiprecision::cpp_rational;

/// Memoized factorial over arbitrary-precision integers.
ExactInt factorial(unsigned n);

/// C(n, k); returns 0 when k < 0 or k > n.
ExactScalar binomial(unsigned n, long long k);

/// Falling factorial n!/(n-k)!. Throws if k > n (an infeasible profile
/// reached term evaluation).
ExactScalar falling(unsigned n, unsigned k);

/// Number of ordered pairs (f, g) of injective maps from a Z-set into an
/// M-set with f(v) != g(v) for every v, by inclusion-exclusion:
///   sum_{k=0..Z} (-1)^k C(Z,k) * M!/(M-Z)! * (M-k)!/(M-Z)!
/// Throws if Z > M.
ExactScalar t6_exact(unsigned z, unsigned m);

}  // namespace permprod
