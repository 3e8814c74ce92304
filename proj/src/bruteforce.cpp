#include "permprod/bruteforce.hpp"

#include <algorithm>
#include <cmath>

namespace permprod {
namespace {

// splitmix64; fixed algorithm so the sampling contract is
// platform-independent (std::uniform_int_distribution is not)
uint64_t splitmix64(uint64_t& state) {
    uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Lemire's bounded draw, bias negligible for bound <= n^2
uint64_t bounded(uint64_t& state, uint64_t bound) {
    return static_cast<uint64_t>((static_cast<__uint128_t>(splitmix64(state)) * bound) >> 64);
}

void injections(unsigned n, const std::vector<unsigned>& blacks, unsigned depth,
                std::vector<unsigned>& whites, std::vector<bool>& used,
                std::vector<Matching>& out) {
    if (depth == blacks.size()) {
        Matching m;
        m.n = n;
        for (unsigned i = 0; i < blacks.size(); ++i) m.edges.emplace_back(blacks[i], whites[i]);
        out.push_back(std::move(m));
        return;
    }
    for (unsigned w = 0; w < n; ++w) {
        if (used[w]) continue;
        used[w] = true;
        whites.push_back(w);
        injections(n, blacks, depth + 1, whites, used, out);
        whites.pop_back();
        used[w] = false;
    }
}

void black_subsets(unsigned n, unsigned m, unsigned start, std::vector<unsigned>& cur,
                   std::vector<Matching>& out) {
    if (cur.size() == m) {
        std::vector<unsigned> whites;
        std::vector<bool> used(n, false);
        injections(n, cur, 0, whites, used, out);
        return;
    }
    for (unsigned b = start; b + (m - cur.size()) <= n; ++b) {
        cur.push_back(b);
        black_subsets(n, m, b + 1, cur, out);
        cur.pop_back();
    }
}

uint64_t count_matchings(const BinaryMatrix& a, unsigned row, unsigned m,
                         std::vector<bool>& used_col) {
    if (m == 0) return 1;
    if (a.n - row < m) return 0;
    // either skip this row or match it to a free column with a 1
    uint64_t total = count_matchings(a, row + 1, m, used_col);
    for (unsigned j = 0; j < a.n; ++j) {
        if (used_col[j] || !a.at(row, j)) continue;
        used_col[j] = true;
        total += count_matchings(a, row + 1, m - 1, used_col);
        used_col[j] = false;
    }
    return total;
}

}  // namespace

std::vector<Matching> enumerate_matchings(unsigned n, unsigned m) {
    if (m > n) throw std::invalid_argument("enumerate_matchings: need m <= n");
    std::vector<Matching> out;
    std::vector<unsigned> cur;
    black_subsets(n, m, 0, cur, out);
    return out;
}

Profile classify_pair(const Matching& m1, const Matching& m2) {
    if (m1.n != m2.n) throw std::invalid_argument("classify_pair: mismatched n");
    const unsigned n = m1.n;
    std::vector<int> white_of_1(n, -1), white_of_2(n, -1);
    std::vector<bool> in_w1(n, false), in_w2(n, false);
    for (auto [b, w] : m1.edges) { white_of_1[b] = static_cast<int>(w); in_w1[w] = true; }
    for (auto [b, w] : m2.edges) { white_of_2[b] = static_cast<int>(w); in_w2[w] = true; }

    Profile p;
    p.n = n;
    p.m = static_cast<unsigned>(m1.edges.size());
    p.m_prime = static_cast<unsigned>(m2.edges.size());

    std::vector<bool> in_d(n, false);
    for (unsigned w = 0; w < n; ++w)
        if (in_w1[w] && in_w2[w]) { in_d[w] = true; ++p.D; }

    for (unsigned b = 0; b < n; ++b) {
        if (white_of_1[b] < 0 || white_of_2[b] < 0) continue;
        ++p.C;
        const unsigned w1 = static_cast<unsigned>(white_of_1[b]);
        const unsigned w2 = static_cast<unsigned>(white_of_2[b]);
        if (w1 == w2) { ++p.Q; continue; }
        const bool d1 = in_d[w1], d2 = in_d[w2];
        if (d1 && d2) ++p.Z;
        else if (d1) ++p.W;
        else if (d2) ++p.X;
        else ++p.E;
    }
    p.A = p.m - p.C;
    p.B = p.m_prime - p.C;
    p.Abar = p.m - p.D;
    p.Bbar = p.m_prime - p.D;
    return p;
}

ExactInt perm_m(const BinaryMatrix& a, unsigned m) {
    if (m > a.n) return 0;
    std::vector<bool> used_col(a.n, false);
    return ExactInt(count_matchings(a, 0, m, used_col));
}

ExactScalar brute_single(unsigned n, unsigned m, unsigned r) {
    EnsembleParams params(n, r);
    const ExactScalar prob = params.p();
    ExactScalar pm = 1;
    for (unsigned i = 0; i < m; ++i) pm *= prob;
    return ExactScalar(enumerate_matchings(n, m).size()) * pm;
}

ExactScalar brute_product(unsigned n, unsigned m, unsigned m_prime, unsigned r) {
    EnsembleParams params(n, r);
    const ExactScalar prob = params.p();
    auto ms1 = enumerate_matchings(n, m);
    // reuse the same list when m == m' instead of enumerating twice
    auto ms2 = (m == m_prime) ? ms1 : enumerate_matchings(n, m_prime);

    // bucket pairs by shared-edge count Q, then weight by p^(m+m'-Q)
    std::vector<uint64_t> by_q(std::min(m, m_prime) + 1, 0);
    for (const auto& a : ms1) {
        for (const auto& b : ms2) {
            unsigned q = 0;
            for (auto e1 : a.edges)
                for (auto e2 : b.edges)
                    if (e1 == e2) ++q;
            ++by_q[q];
        }
    }
    ExactScalar total = 0;
    ExactScalar weight = 1;
    for (unsigned i = 0; i < m + m_prime; ++i) weight *= prob;  // p^(m+m')
    for (unsigned q = 0; q < by_q.size(); ++q) {
        total += ExactScalar(by_q[q]) * weight;
        weight /= prob;  // next bucket has one more shared edge
    }
    return total;
}

McEstimate mc_estimate_single(unsigned n, unsigned m, unsigned r,
                              uint64_t samples, uint64_t seed) {
    if (samples < 1) throw std::invalid_argument("mc_estimate_single: samples >= 1");
    double sum = 0, sum_sq = 0;
    BinaryMatrix a(n);
    for (uint64_t k = 0; k < samples; ++k) {
        uint64_t state = seed ^ (k * 0xd1342543de82ef95ULL + 0x2545f4914f6cdd1dULL);
        splitmix64(state);  // decorrelate nearby seeds
        for (unsigned i = 0; i < n; ++i)
            for (unsigned j = 0; j < n; ++j)
                a.at(i, j) = bounded(state, n) < r ? 1 : 0;
        const double v = perm_m(a, m).convert_to<double>();
        sum += v;
        sum_sq += v * v;
    }
    McEstimate est;
    est.samples = samples;
    est.mean = sum / static_cast<double>(samples);
    const double var = std::max(0.0, sum_sq / static_cast<double>(samples) - est.mean * est.mean);
    est.std_error = samples > 1 ? std::sqrt(var / static_cast<double>(samples - 1)) : 0.0;
    return est;
}

}  // namespace permprod
