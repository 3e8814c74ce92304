#include "permprod/exact.hpp"

namespace permprod {

ExactScalar term_product(const Profile& p, const EnsembleParams& params, bool approx_t6) {
    if (p.n != params.n) throw std::invalid_argument("term_product: profile n != ensemble n");
    if (auto bad = p.violated_constraint())
        throw std::invalid_argument("term_product: infeasible profile, violates " + *bad);

    const ExactScalar prob = params.p();
    ExactScalar t1 = 1;
    for (unsigned i = 0; i < p.m + p.m_prime - p.Q; ++i) t1 *= prob;

    ExactScalar t2(factorial(p.n) / (factorial(p.A) * factorial(p.C) * factorial(p.B) *
                                     factorial(p.n - p.A - p.B - p.C)));
    ExactScalar t3(factorial(p.n) / (factorial(p.Abar) * factorial(p.D) * factorial(p.Bbar) *
                                     factorial(p.n - p.Abar - p.D - p.Bbar)));
    ExactScalar t4(factorial(p.C) / (factorial(p.Q) * factorial(p.Z) * factorial(p.W) *
                                     factorial(p.X) * factorial(p.E)));
    ExactScalar t5 = falling(p.D, p.Q);
    const unsigned pool = p.D - p.Q;
    ExactScalar t6 = approx_t6 ? falling(pool, p.Z) * falling(pool, p.Z)
                               : t6_exact(p.Z, pool);
    ExactScalar t7 = falling(pool - p.Z, p.W);
    ExactScalar t8 = falling(pool - p.Z, p.X);
    ExactScalar t9 = falling(p.Bbar, p.W + p.E) * falling(p.Abar, p.X + p.E);
    ExactScalar t10(factorial(p.A));
    ExactScalar t11(factorial(p.B));

    return t1 * t2 * t3 * t4 * t5 * t6 * t7 * t8 * t9 * t10 * t11;
}

ExactScalar exact_single(unsigned n, unsigned m, unsigned r) {
    if (m > n) throw std::invalid_argument("exact_single: need m <= n");
    EnsembleParams params(n, r);
    ExactScalar b = binomial(n, m);
    ExactScalar result = b * b * ExactScalar(factorial(m));
    const ExactScalar prob = params.p();
    for (unsigned i = 0; i < m; ++i) result *= prob;
    return result;
}

ExactScalar exact_product(unsigned n, unsigned m, unsigned m_prime, unsigned r,
                          bool approx_t6) {
    EnsembleParams params(n, r);
    ExactScalar total = 0;
    for (const Profile& p : enumerate_profiles(n, m, m_prime))
        total += term_product(p, params, approx_t6);
    return total;
}

}  // namespace permprod
