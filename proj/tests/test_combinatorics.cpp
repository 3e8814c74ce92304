#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "permprod/combinatorics.hpp"

#include <algorithm>
#include <vector>

using namespace permprod;

namespace {

// independent oracle: count ordered pairs (f, g) of injective maps from
// a z-set into an m-set with f(v) != g(v) everywhere, by direct
// enumeration of all map pairs
uint64_t t6_brute(unsigned z, unsigned m) {
    std::vector<unsigned> f(z), g(z);
    uint64_t count = 0;
    auto injective = [](const std::vector<unsigned>& v) {
        for (size_t i = 0; i < v.size(); ++i)
            for (size_t j = i + 1; j < v.size(); ++j)
                if (v[i] == v[j]) return false;
        return true;
    };
    std::vector<unsigned> digits(2 * z, 0);
    while (true) {
        for (unsigned i = 0; i < z; ++i) { f[i] = digits[i]; g[i] = digits[z + i]; }
        bool ok = injective(f) && injective(g);
        for (unsigned i = 0; ok && i < z; ++i)
            if (f[i] == g[i]) ok = false;
        if (ok) ++count;
        // odometer over [0, m)^(2z)
        size_t pos = 0;
        while (pos < digits.size() && ++digits[pos] == m) digits[pos++] = 0;
        if (pos == digits.size()) break;
        if (digits.empty()) break;
    }
    return count;
}

}  // namespace

TEST_CASE("binomial") {
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(4, 0) == 1);
    CHECK(binomial(3, 5) == 0);
    CHECK(binomial(3, -1) == 0);
    CHECK(binomial(40, 20) == ExactScalar(ExactInt("137846528820")));
}

TEST_CASE("falling factorial") {
    CHECK(falling(5, 2) == 20);
    CHECK(falling(7, 0) == 1);
    CHECK(falling(3, 3) == 6);
    CHECK_THROWS_AS(falling(2, 3), std::invalid_argument);
}

TEST_CASE("t6_exact spec values") {
    CHECK(t6_exact(0, 4) == 1);
    CHECK(t6_exact(1, 2) == 2);
    CHECK(t6_exact(2, 2) == 2);  // the squared-falling approximation gives 4
    CHECK_THROWS_AS(t6_exact(3, 2), std::invalid_argument);
}

TEST_CASE("t6_exact matches direct enumeration for Z, M <= 5") {
    for (unsigned m = 0; m <= 5; ++m)
        for (unsigned z = 0; z <= m; ++z)
            CHECK(t6_exact(z, m) == ExactScalar(t6_brute(z, m)));
}

TEST_CASE("t6_exact bounded by the approximate count, strict for Z >= 1") {
    for (unsigned m = 1; m <= 7; ++m) {
        for (unsigned z = 0; z <= m; ++z) {
            ExactScalar approx = falling(m, z) * falling(m, z);
            CHECK(t6_exact(z, m) <= approx);
            if (z >= 1) CHECK(t6_exact(z, m) < approx);
        }
    }
    CHECK(t6_exact(0, 5) == falling(5, 0) * falling(5, 0));
}
