#pragma once

#include "permprod/combinatorics.hpp"

#include <optional>
#include <string>
#include <vector>

namespace permprod {

/// Finite Bernoulli ensemble: n x n 0-1 matrices, each entry 1 with
/// probability p = r/n, kept as an exact rational.
struct EnsembleParams {
    unsigned n;
    unsigned r;

    EnsembleParams(unsigned n_, unsigned r_) : n(n_), r(r_) {
        if (r < 1 || r > n) throw std::invalid_argument("EnsembleParams: need 1 <= r <= n");
    }
    ExactScalar p() const { return ExactScalar(r) / ExactScalar(n); }
};

/// Overlap profile of an m-matching / m'-matching pair on K_{n,n}.
/// C, D count common black/white vertices, Q shared edges; Z, W, X, E
/// classify the non-shared common black vertices by whether their two
/// edge endpoints land inside the common white set.
struct Profile {
    unsigned A = 0, B = 0, C = 0, D = 0;
    unsigned Abar = 0, Bbar = 0;
    unsigned Q = 0, Z = 0, W = 0, X = 0, E = 0;
    unsigned m = 0, m_prime = 0, n = 0;

    bool operator==(const Profile&) const = default;

    /// Name of the first violated invariant, or nullopt if feasible.
    std::optional<std::string> violated_constraint() const;

    bool feasible() const { return !violated_constraint().has_value(); }
};

/// All feasible profiles for (n, m, m'), each exactly once, in
/// lexicographic (C, D, Q, Z, W, X) order with E forced.
std::vector<Profile> enumerate_profiles(unsigned n, unsigned m, unsigned m_prime);

}  // namespace permprod
