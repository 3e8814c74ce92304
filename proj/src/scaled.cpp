#include "permprod/scaled.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace permprod {
namespace {

double lerp(double lo, double hi, double u) { return lo + u * (hi - lo); }

}  // namespace

ScaledProfile ScaledProfile::from_free(double s, double t, double r, const FreeCoords& f) {
    ScaledProfile sp;
    sp.s = s;
    sp.t = t;
    sp.r = r;
    sp.c = f[0];
    sp.d = f[1];
    sp.q = f[2];
    sp.z = f[3];
    sp.w = f[4];
    sp.x = f[5];
    sp.e = sp.c - sp.q - sp.z - sp.w - sp.x;
    sp.a = s - sp.c;
    sp.b = t - sp.c;
    sp.abar = s - sp.d;
    sp.bbar = t - sp.d;
    return sp;
}

std::array<double, 12> ScaledProfile::eta_arguments() const {
    return {1 - s - t + c, 1 - s - t + d, q,         z,
            w,             x,             e,         d - q,
            d - q - z - w, d - q - z - x, bbar - w - e, abar - x - e};
}

double ScaledProfile::min_eta_argument() const {
    auto args = eta_arguments();
    return *std::min_element(args.begin(), args.end());
}

std::optional<std::string> ScaledProfile::violated_constraint(double slack) const {
    auto ge0 = [slack](double v) { return v >= -slack; };
    if (!ge0(q)) return "q >= 0";
    if (!ge0(z)) return "z >= 0";
    if (!ge0(w)) return "w >= 0";
    if (!ge0(x)) return "x >= 0";
    if (!ge0(e)) return "e >= 0";
    if (!ge0(a)) return "a >= 0";
    if (!ge0(b)) return "b >= 0";
    if (!ge0(abar)) return "abar >= 0";
    if (!ge0(bbar)) return "bbar >= 0";
    if (!ge0(c)) return "c >= 0";
    if (!ge0(d - q)) return "q <= d";
    if (!ge0(d - q - z - w)) return "d - q - z - w >= 0";
    if (!ge0(d - q - z - x)) return "d - q - z - x >= 0";
    if (!ge0(bbar - w - e)) return "bbar - w - e >= 0";
    if (!ge0(abar - x - e)) return "abar - x - e >= 0";
    if (!ge0(1 - a - b - c)) return "a + b + c <= 1";
    if (!ge0(1 - abar - d - bbar)) return "abar + d + bbar <= 1";
    if (std::abs(a + c - s) > slack) return "a + c = s";
    if (std::abs(b + c - t) > slack) return "b + c = t";
    if (std::abs(abar + d - s) > slack) return "abar + d = s";
    if (std::abs(bbar + d - t) > slack) return "bbar + d = t";
    if (std::abs(q + z + w + x + e - c) > slack) return "q + z + w + x + e = c";
    return std::nullopt;
}

double eta(double v) {
    if (v < 0) throw std::invalid_argument("eta: x < 0");
    if (v == 0) return 0.0;
    return v * std::log(v) - v;
}

double objective_F(const ScaledProfile& sp) {
    if (auto bad = sp.violated_constraint())
        throw std::invalid_argument("objective_F: infeasible profile, violates " + *bad);
    auto clip = [](double v) { return std::max(v, 0.0); };  // shave -1e-13 roundoff
    const double s = sp.s, t = sp.t;
    return (s + t - sp.q) * std::log(sp.r) - 2.0
           - eta(clip(1 - s - t + sp.c)) - eta(clip(1 - s - t + sp.d))
           - eta(clip(sp.q)) - eta(clip(sp.z)) - eta(clip(sp.w)) - eta(clip(sp.x))
           - eta(clip(sp.e))
           + eta(clip(sp.d - sp.q))
           - eta(clip(sp.d - sp.q - sp.z - sp.w)) - eta(clip(sp.d - sp.q - sp.z - sp.x))
           - eta(clip(sp.bbar - sp.w - sp.e)) - eta(clip(sp.abar - sp.x - sp.e));
}

FreeCoords grad_F(const ScaledProfile& sp) {
    if (auto bad = sp.violated_constraint())
        throw std::invalid_argument("grad_F: infeasible profile, violates " + *bad);
    if (sp.min_eta_argument() <= 0)
        throw std::invalid_argument("grad_F: boundary point (eta argument <= 0)");
    const double s = sp.s, t = sp.t;
    const double ln_q = std::log(sp.q), ln_z = std::log(sp.z);
    const double ln_w = std::log(sp.w), ln_x = std::log(sp.x), ln_e = std::log(sp.e);
    const double ln_dq = std::log(sp.d - sp.q);
    const double ln_pw = std::log(sp.d - sp.q - sp.z - sp.w);
    const double ln_px = std::log(sp.d - sp.q - sp.z - sp.x);
    const double ln_bb = std::log(sp.bbar - sp.w - sp.e);
    const double ln_ab = std::log(sp.abar - sp.x - sp.e);
    const double ln_fc = std::log(1 - s - t + sp.c);
    const double ln_fd = std::log(1 - s - t + sp.d);
    FreeCoords g;
    g[0] = -ln_fc - ln_e + ln_bb + ln_ab;                                    // d/dc
    g[1] = -ln_fd + ln_dq - ln_pw - ln_px + ln_bb + ln_ab;                   // d/dd
    g[2] = -std::log(sp.r) - ln_q + ln_e - ln_dq + ln_pw + ln_px - ln_bb - ln_ab;  // d/dq
    g[3] = -ln_z + ln_e + ln_pw + ln_px - ln_bb - ln_ab;                     // d/dz
    g[4] = -ln_w + ln_e + ln_pw - ln_ab;                                     // d/dw
    g[5] = -ln_x + ln_e + ln_px - ln_bb;                                     // d/dx
    return g;
}

double lnn_coefficient(const ScaledProfile& sp) {
    const double a = sp.a, b = sp.b, c = sp.c, d = sp.d;
    const double abar = sp.abar, bbar = sp.bbar;
    const double q = sp.q, z = sp.z, w = sp.w, x = sp.x, e = sp.e;
    double coeff = 0;
    coeff += 1 - a - c - b - (1 - a - b - c);                // T2
    coeff += 1 - abar - d - bbar - (1 - abar - d - bbar);    // T3
    coeff += c - q - z - w - x - e;                          // T4
    coeff += d - (d - q);                                    // T5
    coeff += 2 * ((d - q) - (d - q - z));                    // T6
    coeff += (d - q - z) - (d - q - z - w);                  // T7
    coeff += (d - q - z) - (d - q - z - x);                  // T8
    coeff += bbar - (bbar - w - e) + abar - (abar - x - e);  // T9
    coeff += a;                                              // T10
    coeff += b;                                              // T11
    coeff -= sp.s + sp.t - q;                                // T1's -(s+t-q) ln n
    return coeff;
}

ScaledProfile polytope_point(double s, double t, double r, const FreeCoords& u) {
    const double lo = std::max(0.0, s + t - 1);
    const double hi = std::min(s, t);
    const double d = lerp(lo, hi, u[0]);
    const double q = lerp(0.0, d, u[1]);
    const double z = lerp(std::max(0.0, lo + 2 * d - s - t - q), d - q, u[2]);
    const double w = lerp(std::max(0.0, lo + d - s - q - z),
                          std::min(std::min(d - q - z, t - d),
                                   std::min(hi - q - z, hi + t - lo - d)),
                          u[3]);
    const double x = lerp(std::max(0.0, lo + d - t - q - z),
                          std::min(d - q - z, std::min(hi - q - z - w, s - d)),
                          u[4]);
    const double e = lerp(std::max(0.0, lo - q - z - w - x),
                          std::min(hi - q - z - w - x, std::min(t - d - w, s - d - x)),
                          u[5]);
    const double c = q + z + w + x + e;
    return ScaledProfile::from_free(s, t, r, {c, d, q, z, w, x});
}

double log_term_product_at(const ScaledProfile& sp, unsigned long long n) {
    auto cnt = [n](double v) -> long long { return std::llround(v * static_cast<double>(n)); };
    const long long N = static_cast<long long>(n);
    const long long M = cnt(sp.s), Mp = cnt(sp.t);
    const long long Q = cnt(sp.q), Z = cnt(sp.z), W = cnt(sp.w), X = cnt(sp.x), E = cnt(sp.e);
    const long long C = Q + Z + W + X + E, D = cnt(sp.d);
    const long long A = M - C, B = Mp - C, Ab = M - D, Bb = Mp - D;
    const long long pool = D - Q;
    if (A < 0 || B < 0 || Ab < 0 || Bb < 0 || pool < Z || pool - Z < W || pool - Z < X ||
        Bb < W + E || Ab < X + E || N < A + B + C || N < Ab + D + Bb)
        throw std::invalid_argument("log_term_product_at: rounded profile infeasible");
    auto lf = [](long long k) { return std::lgamma(static_cast<double>(k) + 1.0); };
    auto lfall = [&](long long a, long long b) { return lf(a) - lf(a - b); };
    double ln = 0;
    ln += static_cast<double>(M + Mp - Q) * std::log(sp.r / static_cast<double>(n));  // T1
    ln += lf(N) - lf(A) - lf(C) - lf(B) - lf(N - A - B - C);                          // T2
    ln += lf(N) - lf(Ab) - lf(D) - lf(Bb) - lf(N - Ab - D - Bb);                      // T3
    ln += lf(C) - lf(Q) - lf(Z) - lf(W) - lf(X) - lf(E);                              // T4
    ln += lfall(D, Q);                                                                // T5
    ln += 2 * lfall(pool, Z);                                                         // T6
    ln += lfall(pool - Z, W) + lfall(pool - Z, X);                                    // T7, T8
    ln += lfall(Bb, W + E) + lfall(Ab, X + E);                                        // T9
    ln += lf(A) + lf(B);                                                              // T10, T11
    return ln / static_cast<double>(n);
}

double log_single_at(double s, double r, unsigned long long n) {
    auto lf = [](double k) { return std::lgamma(k + 1.0); };
    const double N = static_cast<double>(n);
    const double M = std::round(s * N);
    const double ln_binom = lf(N) - lf(M) - lf(N - M);
    return (2 * ln_binom + lf(M) + M * std::log(r / N)) / N;
}

}  // namespace permprod
