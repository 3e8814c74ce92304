#include "permprod/combinatorics.hpp"

#include <mutex>

namespace permprod {

ExactInt factorial(unsigned n) {
    static std::vector<ExactInt> cache{1, 1};
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    while (cache.size() <= n) {
        cache.push_back(cache.back() * ExactInt(cache.size()));
    }
    return cache[n];  // by value: the cache may reallocate under a later call
}

ExactScalar binomial(unsigned n, long long k) {
    if (k < 0 || k > static_cast<long long>(n)) return 0;
    unsigned uk = static_cast<unsigned>(k);
    ExactInt num = factorial(n) / (factorial(uk) * factorial(n - uk));
    return ExactScalar(num);
}

ExactScalar falling(unsigned n, unsigned k) {
    if (k > n) throw std::invalid_argument("falling: k > n (infeasible profile)");
    return ExactScalar(factorial(n) / factorial(n - k));
}

ExactScalar t6_exact(unsigned z, unsigned m) {
    if (z > m) throw std::invalid_argument("t6_exact: Z > M (infeasible profile)");
    const ExactInt fall_mz = factorial(m) / factorial(m - z);
    ExactInt total = 0;
    for (unsigned k = 0; k <= z; ++k) {
        ExactInt binom_zk = factorial(z) / (factorial(k) * factorial(z - k));
        ExactInt term = binom_zk * fall_mz * (factorial(m - k) / factorial(m - z));
        if (k % 2 == 0)
            total += term;
        else
            total -= term;
    }
    return ExactScalar(total);
}

}  // namespace permprod
