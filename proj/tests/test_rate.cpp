#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "permprod/combinatorics.hpp"
#include "permprod/rate.hpp"
#include "permprod/scaled.hpp"

#include <cmath>
#include <random>

using namespace permprod;

namespace {

ScaledProfile random_feasible(std::mt19937_64& rng, double s, double t, double r) {
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    FreeCoords u;
    for (auto& v : u) v = unif(rng);
    return polytope_point(s, t, r, u);
}

ScaledProfile random_interior(std::mt19937_64& rng, double s, double t, double r) {
    std::uniform_real_distribution<double> unif(0.15, 0.85);
    for (int tries = 0; tries < 1000; ++tries) {
        FreeCoords u;
        for (auto& v : u) v = unif(rng);
        ScaledProfile sp = polytope_point(s, t, r, u);
        if (sp.min_eta_argument() > 1e-3) return sp;
    }
    throw std::runtime_error("no interior point found");
}

}  // namespace

TEST_CASE("eta") {
    CHECK(eta(0.0) == 0.0);
    CHECK(eta(1.0) == doctest::Approx(-1.0));
    CHECK(eta(std::exp(1.0)) == doctest::Approx(0.0));
    CHECK_THROWS_AS(eta(-0.1), std::invalid_argument);
}

TEST_CASE("objective_F hand-evaluated values") {
    // all-disjoint profile at s = t = 0.4, r = 5
    ScaledProfile sp = ScaledProfile::from_free(0.4, 0.4, 5.0, {0, 0, 0, 0, 0, 0});
    const double expected = 0.8 * std::log(5.0) - 2 - 2 * eta(0.2) - 2 * eta(0.4);
    CHECK(objective_F(sp) == doctest::Approx(expected).epsilon(1e-12));
    CHECK(objective_F(sp) == doctest::Approx(1.86436).epsilon(1e-5));

    // empty matchings: the rate is exactly zero
    ScaledProfile empty = ScaledProfile::from_free(0.0, 0.0, 3.0, {0, 0, 0, 0, 0, 0});
    CHECK(objective_F(empty) == doctest::Approx(0.0).epsilon(1e-15));
}

TEST_CASE("objective_F rejects infeasible profiles by constraint name") {
    ScaledProfile sp = ScaledProfile::from_free(0.4, 0.4, 5.0, {0.3, 0.1, 0.2, 0, 0, 0});
    CHECK_THROWS_WITH_AS(objective_F(sp), doctest::Contains("q <= d"), std::invalid_argument);
}

TEST_CASE("objective_F is symmetric under swapping the two matchings") {
    std::mt19937_64 rng(11);
    for (int k = 0; k < 200; ++k) {
        ScaledProfile sp = random_feasible(rng, 0.3, 0.6, 7.0);
        // swap map: a<->b, abar<->bbar, w<->x, s<->t
        ScaledProfile sw = ScaledProfile::from_free(0.6, 0.3, 7.0,
                                                    {sp.c, sp.d, sp.q, sp.z, sp.x, sp.w});
        CHECK(objective_F(sw) == doctest::Approx(objective_F(sp)).epsilon(1e-12));
    }
}

TEST_CASE("ln n coefficients cancel at random feasible profiles") {
    std::mt19937_64 rng(5);
    const double grids[][2] = {{0.4, 0.4}, {0.8, 0.8}, {0.25, 0.7}, {0.95, 0.99}};
    for (auto [s, t] : grids) {
        for (int k = 0; k < 250; ++k) {
            ScaledProfile sp = random_feasible(rng, s, t, 5.0);
            CHECK(std::abs(lnn_coefficient(sp)) <= 1e-12);
        }
    }
}

TEST_CASE("grad_F matches central finite differences at 100 interior points") {
    std::mt19937_64 rng(17);
    const double h = 1e-6;
    int checked = 0;
    while (checked < 100) {
        const double s = 0.3 + 0.4 * (checked % 5) / 5.0;
        const double t = s + 0.1;
        ScaledProfile sp = random_interior(rng, s, t, 4.0);
        FreeCoords g = grad_F(sp);
        FreeCoords f = sp.free();
        for (int j = 0; j < 6; ++j) {
            FreeCoords fp = f, fm = f;
            fp[j] += h;
            fm[j] -= h;
            const double num =
                (objective_F(ScaledProfile::from_free(s, t, 4.0, fp)) -
                 objective_F(ScaledProfile::from_free(s, t, 4.0, fm))) / (2 * h);
            CHECK(std::abs(num - g[j]) / std::max(1.0, std::abs(g[j])) <= 1e-5);
        }
        ++checked;
    }
}

TEST_CASE("grad_F rejects boundary points") {
    ScaledProfile sp = ScaledProfile::from_free(0.4, 0.4, 5.0, {0, 0, 0, 0, 0, 0});
    CHECK_THROWS_AS(grad_F(sp), std::invalid_argument);
}

TEST_CASE("gradient symmetry at s = t, w = x points") {
    std::mt19937_64 rng(23);
    for (int k = 0; k < 20; ++k) {
        ScaledProfile base = random_interior(rng, 0.5, 0.5, 6.0);
        const double wx = (base.w + base.x) / 2;
        ScaledProfile sp = ScaledProfile::from_free(
            0.5, 0.5, 6.0, {base.c, base.d, base.q, base.z, wx, wx});
        if (sp.min_eta_argument() <= 1e-6) continue;
        FreeCoords g = grad_F(sp);
        CHECK(g[4] == doctest::Approx(g[5]).epsilon(1e-10));
    }
}

TEST_CASE("objective_F is the n -> infinity limit of the finite-n terms") {
    // feasible profile with coordinates that scale to integers
    ScaledProfile sp =
        ScaledProfile::from_free(0.4, 0.4, 5.0, {0.2, 0.2, 0.05, 0.05, 0.04, 0.03});
    const double limit = objective_F(sp);
    const double d1 = std::abs(log_term_product_at(sp, 1000) - limit);
    const double d2 = std::abs(log_term_product_at(sp, 2000) - limit);
    const double d3 = std::abs(log_term_product_at(sp, 10000) - limit);
    CHECK(d2 < d1);
    CHECK(d3 < d2);
    // error is O(ln n / n): fit the constant at n = 1000, check at 10000
    const double c_fit = d1 * 1000 / std::log(1000.0);
    CHECK(d3 <= 1.5 * c_fit * std::log(10000.0) / 10000.0);
}

TEST_CASE("T6 distinctness correction vanishes at rate 1/n") {
    // z = 0.2, pool d - q = 0.5
    auto delta = [](unsigned long long n) {
        const unsigned z = static_cast<unsigned>(0.2 * n);
        const unsigned pool = static_cast<unsigned>(0.5 * n);
        const double ln_exact = std::log(t6_exact(z, pool).convert_to<double>());
        const double ln_approx =
            2 * std::log((falling(pool, z)).convert_to<double>());
        return std::abs(ln_exact - ln_approx) / static_cast<double>(n);
    };
    const double d40 = delta(40), d80 = delta(80), d160 = delta(160);
    CHECK(d80 < d40);
    CHECK(d160 < d80);
    CHECK(d80 / d40 > 0.3);
    CHECK(d80 / d40 < 0.7);  // approximately halves: the gap is O(1/n)
}

TEST_CASE("rate_single closed form") {
    CHECK(rate_single(0.4, 50) == doctest::Approx(4.2886 / 2).epsilon(2.5e-4));
    CHECK(rate_single(0.8, 5) == doctest::Approx(2.6197 / 2).epsilon(2.5e-4));
    CHECK(rate_single(1e-9, 5.0) == doctest::Approx(0.0).epsilon(1e-6));
    CHECK(std::abs(rate_single(1.0, 3.0) - (-1 + std::log(3.0))) < 1e-14);
    CHECK_THROWS_AS(rate_single(0.0, 5.0), std::invalid_argument);
    CHECK_THROWS_AS(rate_single(0.5, 0.0), std::invalid_argument);
}

TEST_CASE("rate_single agrees with log-gamma evaluation at n = 10^6") {
    for (double s : {0.4, 0.8, 0.55}) {
        for (double r : {5.0, 50.0}) {
            CHECK(std::abs(rate_single(s, r) - log_single_at(s, r, 1000000)) < 1e-4);
        }
    }
}

TEST_CASE("rate_product is symmetric in (s, t)") {
    OptimizerOptions opts;
    opts.starts = 16;
    RateResult a = rate_product(0.3, 0.6, 8.0, opts);
    RateResult b = rate_product(0.6, 0.3, 8.0, opts);
    CHECK(std::abs(a.value - b.value) < 1e-8);
}

TEST_CASE("rate_product table cell with diagnostics") {
    OptimizerOptions opts;
    opts.starts = 24;
    RateResult res = rate_product(0.4, 0.4, 5.0, opts);
    CHECK(res.value == doctest::Approx(2.4771).epsilon(2.5e-4));
    CHECK(res.converged);
    CHECK(!res.boundary);
    CHECK(res.stationarity_residual <= 1e-8);
    CHECK(res.starts_used == 24);
}

TEST_CASE("sweep_r validates input and reports decreasing gaps") {
    CHECK_THROWS_AS(sweep_r(0.4, {}), std::invalid_argument);
    CHECK_THROWS_AS(sweep_r(0.4, {50, 5}), std::invalid_argument);
    OptimizerOptions opts;
    opts.starts = 16;
    auto rows = sweep_r(0.4, {5, 50}, opts);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].gap == doctest::Approx(0.0305).epsilon(2e-3));
    CHECK(rows[1].gap == doctest::Approx(0.0032).epsilon(2e-2));
    CHECK(rows[1].gap < rows[0].gap);
}

TEST_CASE("polytope_point always lands in the feasible region") {
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    const double grids[][2] = {{0.1, 0.1}, {0.4, 0.4}, {0.8, 0.8}, {0.3, 0.9}, {1.0, 1.0}};
    for (auto [s, t] : grids) {
        for (int k = 0; k < 500; ++k) {
            FreeCoords u;
            for (auto& v : u) v = unif(rng);
            ScaledProfile sp = polytope_point(s, t, 5.0, u);
            auto bad = sp.violated_constraint(1e-10);
            CHECK(!bad);
            if (bad) MESSAGE("violated: " << *bad << " at s=" << s << " t=" << t);
        }
    }
}
