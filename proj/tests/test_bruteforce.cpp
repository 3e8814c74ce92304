#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "permprod/bruteforce.hpp"
#include "permprod/exact.hpp"

#include <cmath>
#include <set>

using namespace permprod;

TEST_CASE("enumerate_matchings counts and uniqueness") {
    CHECK(enumerate_matchings(2, 1).size() == 4);
    CHECK(enumerate_matchings(3, 2).size() == 18);
    CHECK(enumerate_matchings(5, 0).size() == 1);
    auto ms = enumerate_matchings(4, 3);
    std::set<std::vector<std::pair<unsigned, unsigned>>> seen;
    for (const auto& m : ms) seen.insert(m.edges);
    CHECK(seen.size() == ms.size());  // each matching exactly once
}

TEST_CASE("classify_pair hand cases") {
    Matching m1{2, {{0, 0}}}, m2{2, {{0, 1}}};
    Profile p = classify_pair(m1, m2);
    CHECK(p.C == 1);
    CHECK(p.D == 0);
    CHECK(p.Q == 0);
    CHECK(p.E == 1);
    CHECK(p.Abar == 1);
    CHECK(p.Bbar == 1);

    Matching m3{2, {{0, 0}, {1, 1}}}, m4{2, {{0, 1}, {1, 0}}};
    Profile q = classify_pair(m3, m4);
    CHECK(q.C == 2);
    CHECK(q.D == 2);
    CHECK(q.Q == 0);
    CHECK(q.Z == 2);

    // identical matchings: everything is shared
    for (const auto& m : enumerate_matchings(3, 2)) {
        Profile r = classify_pair(m, m);
        CHECK(r.C == 2);
        CHECK(r.D == 2);
        CHECK(r.Q == 2);
        CHECK(r.Z + r.W + r.X + r.E == 0);
        CHECK(r.A == 0);
        CHECK(r.B == 0);
    }
    CHECK_THROWS_AS(classify_pair(m1, Matching{3, {{0, 0}}}), std::invalid_argument);
}

TEST_CASE("classify_pair swap symmetry: A<->B, Abar<->Bbar, W<->X") {
    for (unsigned n = 2; n <= 4; ++n) {
        auto ms1 = enumerate_matchings(n, n / 2);
        auto ms2 = enumerate_matchings(n, (n + 1) / 2);
        for (const auto& a : ms1) {
            for (const auto& b : ms2) {
                Profile p = classify_pair(a, b);
                Profile q = classify_pair(b, a);
                CHECK(p.A == q.B);
                CHECK(p.B == q.A);
                CHECK(p.Abar == q.Bbar);
                CHECK(p.Bbar == q.Abar);
                CHECK(p.W == q.X);
                CHECK(p.X == q.W);
                CHECK(p.C == q.C);
                CHECK(p.D == q.D);
                CHECK(p.Q == q.Q);
                CHECK(p.Z == q.Z);
                CHECK(p.E == q.E);
            }
        }
    }
}

TEST_CASE("perm_m basics") {
    BinaryMatrix eye(2);
    eye.at(0, 0) = eye.at(1, 1) = 1;
    CHECK(perm_m(eye, 1) == 2);
    CHECK(perm_m(eye, 2) == 1);

    BinaryMatrix ones(3);
    for (unsigned i = 0; i < 3; ++i)
        for (unsigned j = 0; j < 3; ++j) ones.at(i, j) = 1;
    CHECK(perm_m(ones, 0) == 1);
    CHECK(perm_m(ones, 2) == 18);
    CHECK(perm_m(ones, 3) == 6);
}

TEST_CASE("perm_m on the all-ones matrix matches the matching count") {
    for (unsigned n = 1; n <= 5; ++n) {
        BinaryMatrix ones(n);
        for (auto& v : ones.entries) v = 1;
        for (unsigned m = 0; m <= n; ++m) {
            ExactScalar expected = binomial(n, m) * binomial(n, m) * ExactScalar(factorial(m));
            CHECK(ExactScalar(perm_m(ones, m)) == expected);
        }
    }
}

TEST_CASE("brute_single values and exact agreement for n <= 6") {
    CHECK(brute_single(2, 1, 1) == 2);
    CHECK(brute_single(3, 2, 1) == 2);
    for (unsigned n = 1; n <= 6; ++n)
        for (unsigned m = 0; m <= n; ++m)
            for (unsigned r = 1; r <= n; ++r)
                CHECK(brute_single(n, m, r) == exact_single(n, m, r));
}

TEST_CASE("brute_product spec values") {
    CHECK(brute_product(2, 1, 1, 1) == 5);
    CHECK(brute_product(4, 0, 0, 2) == 1);
    CHECK(brute_product(3, 1, 1, 3) == 81);  // p = 1: just the 9*9 pair count
}

TEST_CASE("mc_estimate_single is deterministic and statistically consistent") {
    McEstimate a = mc_estimate_single(3, 2, 1, 20000, 42);
    McEstimate b = mc_estimate_single(3, 2, 1, 20000, 42);
    CHECK(a.mean == b.mean);
    CHECK(a.std_error == b.std_error);
    const double exact = brute_single(3, 2, 1).convert_to<double>();
    CHECK(std::abs(a.mean - exact) <= 4 * a.std_error);

    McEstimate c = mc_estimate_single(2, 1, 1, 20000, 7);
    CHECK(std::abs(c.mean - 2.0) <= 4 * c.std_error);

    McEstimate d = mc_estimate_single(4, 0, 2, 100, 1);
    CHECK(d.mean == 1.0);
    CHECK(d.std_error == 0.0);
}
