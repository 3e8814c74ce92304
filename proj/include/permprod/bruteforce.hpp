#pragma once

#include "permprod/profile.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace permprod {

/// Partial matching of K_{n,n}: edges (black, white), no repeated
/// black or white index.
struct Matching {
    unsigned n = 0;
    std::vector<std::pair<unsigned, unsigned>> edges;  // sorted by black index
};

struct BinaryMatrix {
    unsigned n = 0;
    std::vector<uint8_t> entries;  // row-major, values 0/1

    BinaryMatrix(unsigned n_) : n(n_), entries(n_ * n_, 0) {}
    uint8_t& at(unsigned i, unsigned j) { return entries[i * n + j]; }
    uint8_t at(unsigned i, unsigned j) const { return entries[i * n + j]; }
};

/// All C(n,m)^2 m! m-matchings of K_{n,n}, in lexicographic order of
/// (black subset, white injection).
std::vector<Matching> enumerate_matchings(unsigned n, unsigned m);

/// Overlap profile of a matching pair (ground-truth classifier).
Profile classify_pair(const Matching& m1, const Matching& m2);

/// Number of m-matchings supported on the ones of A.
ExactInt perm_m(const BinaryMatrix& a, unsigned m);

/// E(perm_m) by summation over matchings: each contributes p^m.
ExactScalar brute_single(unsigned n, unsigned m, unsigned r);

/// E(perm_m perm_m') by exhaustive pair summation: each pair
/// contributes p^(m + m' - Q).
ExactScalar brute_product(unsigned n, unsigned m, unsigned m_prime, unsigned r);

struct McEstimate {
    double mean = 0;
    double std_error = 0;
    uint64_t samples = 0;
};

/// Monte Carlo estimate of E(perm_m): samples Bernoulli(r/n) matrices.
/// Deterministic given (seed, samples); each sample's generator is
/// derived from (seed, index) so partitioning cannot change the result.
McEstimate mc_estimate_single(unsigned n, unsigned m, unsigned r,
                              uint64_t samples, uint64_t seed);

}  // namespace permprod
