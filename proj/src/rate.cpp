#include "permprod/rate.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>

namespace permprod {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

uint64_t splitmix64(uint64_t& state) {
    uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

double uniform01(uint64_t& state) {
    return (splitmix64(state) >> 11) * 0x1.0p-53;
}

double sigmoid(double v) { return 1.0 / (1.0 + std::exp(-v)); }
double logit(double u) { return std::log(u / (1.0 - u)); }

// objective in transformed coordinates (negated for minimization)
struct CubeObjective {
    double s, t, r;
    double operator()(const FreeCoords& theta) const {
        FreeCoords u;
        for (int i = 0; i < 6; ++i) u[i] = sigmoid(theta[i]);
        ScaledProfile sp = polytope_point(s, t, r, u);
        if (sp.violated_constraint()) return kInf;  // roundoff fell outside
        return -objective_F(sp);
    }
};

struct LocalMax {
    double value = -kInf;
    FreeCoords theta{};
    FreeCoords free{};
};

// Nelder-Mead over R^6, fixed coefficients, optional coordinate mask
// (masked coordinates stay at their initial value).
template <typename Fn>
LocalMax nelder_mead(const Fn& f, FreeCoords theta0, const std::array<bool, 6>& active,
                     int max_iter, double s, double t, double r) {
    std::vector<int> idx;
    for (int i = 0; i < 6; ++i)
        if (active[i]) idx.push_back(i);
    const int dim = static_cast<int>(idx.size());

    auto expand = [&](const std::vector<double>& v) {
        FreeCoords th = theta0;
        for (int i = 0; i < dim; ++i) th[idx[i]] = v[i];
        return th;
    };

    std::vector<std::vector<double>> simplex(dim + 1, std::vector<double>(dim));
    std::vector<double> fv(dim + 1);
    for (int i = 0; i <= dim; ++i) {
        for (int j = 0; j < dim; ++j) simplex[i][j] = theta0[idx[j]] + (i == j + 1 ? 0.7 : 0.0);
        fv[i] = f(expand(simplex[i]));
    }

    const double alpha = 1.0, gamma = 2.0, rho = 0.5, sigma = 0.5;
    for (int iter = 0; iter < max_iter; ++iter) {
        std::vector<int> order(dim + 1);
        for (int i = 0; i <= dim; ++i) order[i] = i;
        std::sort(order.begin(), order.end(), [&](int a, int b) { return fv[a] < fv[b]; });
        {
            std::vector<std::vector<double>> s2(dim + 1);
            std::vector<double> f2(dim + 1);
            for (int i = 0; i <= dim; ++i) { s2[i] = simplex[order[i]]; f2[i] = fv[order[i]]; }
            simplex = std::move(s2);
            fv = std::move(f2);
        }
        if (std::isfinite(fv[0]) && fv[dim] - fv[0] <= 1e-13 * (1.0 + std::abs(fv[0]))) break;

        std::vector<double> centroid(dim, 0.0);
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j) centroid[j] += simplex[i][j] / dim;

        auto point = [&](double coef) {
            std::vector<double> p(dim);
            for (int j = 0; j < dim; ++j) p[j] = centroid[j] + coef * (simplex[dim][j] - centroid[j]);
            return p;
        };
        auto refl = point(-alpha);
        double fr = f(expand(refl));
        if (fr < fv[0]) {
            auto exp_p = point(-alpha * gamma);
            double fe = f(expand(exp_p));
            if (fe < fr) { simplex[dim] = exp_p; fv[dim] = fe; }
            else { simplex[dim] = refl; fv[dim] = fr; }
        } else if (fr < fv[dim - 1]) {
            simplex[dim] = refl;
            fv[dim] = fr;
        } else {
            auto contr = fr < fv[dim] ? point(-alpha * rho) : point(rho);
            double fc = f(expand(contr));
            if (fc < std::min(fr, fv[dim])) { simplex[dim] = contr; fv[dim] = fc; }
            else {
                for (int i = 1; i <= dim; ++i) {
                    for (int j = 0; j < dim; ++j)
                        simplex[i][j] = simplex[0][j] + sigma * (simplex[i][j] - simplex[0][j]);
                    fv[i] = f(expand(simplex[i]));
                }
            }
        }
    }
    int best = 0;
    for (int i = 1; i <= dim; ++i)
        if (fv[i] < fv[best]) best = i;
    LocalMax lm;
    lm.value = -fv[best];
    lm.theta = expand(simplex[best]);
    FreeCoords u;
    for (int i = 0; i < 6; ++i) u[i] = sigmoid(lm.theta[i]);
    lm.free = polytope_point(s, t, r, u).free();
    return lm;
}

// F evaluated defensively: -inf outside the polytope
double safe_F(double s, double t, double r, const FreeCoords& free) {
    ScaledProfile sp = ScaledProfile::from_free(s, t, r, free);
    if (sp.violated_constraint()) return -kInf;
    return objective_F(sp);
}

// Newton polish with analytic gradient in the free coordinates; only
// valid while strictly interior. Returns polished coords in-place.
void newton_polish(double s, double t, double r, FreeCoords& free, double eps) {
    for (int iter = 0; iter < 60; ++iter) {
        ScaledProfile sp = ScaledProfile::from_free(s, t, r, free);
        if (sp.violated_constraint() || sp.min_eta_argument() <= eps) return;
        FreeCoords g = grad_F(sp);
        double gnorm = 0;
        for (double v : g) gnorm = std::max(gnorm, std::abs(v));
        if (gnorm <= 1e-12) return;

        // finite-difference Hessian of the analytic gradient
        double h[6][6];
        const double step = 1e-6;
        for (int j = 0; j < 6; ++j) {
            FreeCoords fp = free, fm = free;
            fp[j] += step;
            fm[j] -= step;
            ScaledProfile spp = ScaledProfile::from_free(s, t, r, fp);
            ScaledProfile spm = ScaledProfile::from_free(s, t, r, fm);
            if (spp.violated_constraint() || spm.violated_constraint() ||
                spp.min_eta_argument() <= 0 || spm.min_eta_argument() <= 0)
                return;
            FreeCoords gp = grad_F(spp), gm = grad_F(spm);
            for (int i = 0; i < 6; ++i) h[i][j] = (gp[i] - gm[i]) / (2 * step);
        }
        // solve h * delta = -g by Gaussian elimination with partial pivoting
        double aug[6][7];
        for (int i = 0; i < 6; ++i) {
            for (int j = 0; j < 6; ++j) aug[i][j] = h[i][j];
            aug[i][6] = -g[i];
        }
        for (int col = 0; col < 6; ++col) {
            int piv = col;
            for (int row = col + 1; row < 6; ++row)
                if (std::abs(aug[row][col]) > std::abs(aug[piv][col])) piv = row;
            if (std::abs(aug[piv][col]) < 1e-14) return;
            std::swap(aug[col], aug[piv]);
            for (int row = 0; row < 6; ++row) {
                if (row == col) continue;
                double factor = aug[row][col] / aug[col][col];
                for (int j = col; j <= 6; ++j) aug[row][j] -= factor * aug[col][j];
            }
        }
        FreeCoords delta;
        for (int i = 0; i < 6; ++i) delta[i] = aug[i][6] / aug[i][i];

        const double f0 = safe_F(s, t, r, free);
        double scale = 1.0;
        bool moved = false;
        for (int bt = 0; bt < 40; ++bt, scale *= 0.5) {
            FreeCoords trial = free;
            for (int i = 0; i < 6; ++i) trial[i] += scale * delta[i];
            ScaledProfile spt = ScaledProfile::from_free(s, t, r, trial);
            if (spt.violated_constraint() || spt.min_eta_argument() <= 0) continue;
            if (objective_F(spt) >= f0) {
                free = trial;
                moved = true;
                break;
            }
        }
        if (!moved) return;
    }
}

// boundary-projected stationarity residual via finite differences;
// works on the boundary where the analytic gradient is undefined
double projected_residual(double s, double t, double r, const FreeCoords& free) {
    ScaledProfile sp = ScaledProfile::from_free(s, t, r, free);
    if (!sp.violated_constraint() && sp.min_eta_argument() > 1e-6) {
        FreeCoords g = grad_F(sp);
        double res = 0;
        for (double v : g) res = std::max(res, std::abs(v));
        return res;
    }
    const double h = 1e-7;
    const double f0 = safe_F(s, t, r, free);
    double res = 0;
    for (int j = 0; j < 6; ++j) {
        FreeCoords fp = free, fm = free;
        fp[j] += h;
        fm[j] -= h;
        const double fpv = safe_F(s, t, r, fp);
        const double fmv = safe_F(s, t, r, fm);
        const bool up_ok = std::isfinite(fpv), dn_ok = std::isfinite(fmv);
        if (up_ok && dn_ok) {
            res = std::max(res, std::abs((fpv - fmv) / (2 * h)));
        } else if (up_ok) {  // lower bound active: need F non-increasing upward
            res = std::max(res, std::max(0.0, (fpv - f0) / h));
        } else if (dn_ok) {  // upper bound active: need F non-increasing downward
            res = std::max(res, std::max(0.0, (fmv - f0) / h));
        }
    }
    return res;
}

bool lex_less(const FreeCoords& a, const FreeCoords& b) {
    for (int i = 0; i < 6; ++i) {
        if (a[i] < b[i]) return true;
        if (a[i] > b[i]) return false;
    }
    return false;
}

}  // namespace

double rate_single(double s, double r) {
    if (!(s > 0) || s > 1) throw std::invalid_argument("rate_single: need 0 < s <= 1");
    if (!(r > 0)) throw std::invalid_argument("rate_single: need r > 0");
    const double one_minus = 1 - s;
    const double tail = one_minus > 0 ? -2 * one_minus * std::log(one_minus) : 0.0;
    return -s * std::log(s) + tail - s + s * std::log(r);
}

RateResult rate_product(double s, double t, double r, const OptimizerOptions& opts) {
    if (!(s > 0) || s > 1 || !(t > 0) || t > 1)
        throw std::invalid_argument("rate_product: need s, t in (0, 1]");
    if (!(r > 0)) throw std::invalid_argument("rate_product: need r > 0");
    if (s > t) std::swap(s, t);  // F is symmetric under swapping the matchings

    CubeObjective obj{s, t, r};
    const std::array<bool, 6> all_active{true, true, true, true, true, true};

    std::vector<LocalMax> locals(opts.starts);
    auto run_start = [&](int k) {
        uint64_t state = opts.seed;
        splitmix64(state);
        state ^= 0x100000001b3ULL * static_cast<uint64_t>(k + 1);
        FreeCoords theta0;
        for (int i = 0; i < 6; ++i) {
            double u = 0.02 + 0.96 * uniform01(state);  // sequential-fraction start
            theta0[i] = logit(u);
        }
        locals[k] = nelder_mead(obj, theta0, all_active, opts.max_nm_iter, s, t, r);
    };
    const int threads = std::max(1, opts.threads);
    if (threads == 1) {
        for (int k = 0; k < opts.starts; ++k) run_start(k);
    } else {
        std::vector<std::thread> pool;
        std::atomic<int> next{0};
        for (int w = 0; w < threads; ++w)
            pool.emplace_back([&] {
                for (int k = next.fetch_add(1); k < opts.starts; k = next.fetch_add(1))
                    run_start(k);
            });
        for (auto& th : pool) th.join();
    }

    // deterministic reduction: best value, ties by lexicographically
    // smallest free coordinates
    int best = 0;
    for (int k = 1; k < opts.starts; ++k) {
        if (locals[k].value > locals[best].value ||
            (locals[k].value == locals[best].value && lex_less(locals[k].free, locals[best].free)))
            best = k;
    }
    // two near-equal local maxima with different argmax?
    bool multiple = false;
    for (int k = 0; k < opts.starts; ++k) {
        if (k == best) continue;
        if (std::abs(locals[k].value - locals[best].value) <= 1e-6) {
            double dist = 0;
            for (int i = 0; i < 6; ++i)
                dist = std::max(dist, std::abs(locals[k].free[i] - locals[best].free[i]));
            if (dist > 1e-3) multiple = true;
        }
    }

    FreeCoords free = locals[best].free;
    double value = locals[best].value;
    {
        ScaledProfile sp = ScaledProfile::from_free(s, t, r, free);
        if (!sp.violated_constraint() && sp.min_eta_argument() > opts.boundary_eps) {
            newton_polish(s, t, r, free, 0.0);
            value = std::max(value, safe_F(s, t, r, free));
        }
    }

    RateResult res;
    res.starts_used = opts.starts;
    res.multiple_maxima = multiple;

    ScaledProfile arg = ScaledProfile::from_free(s, t, r, free);
    res.boundary = arg.min_eta_argument() <= opts.boundary_eps;
    if (res.boundary) {
        // re-run with near-zero unit-cube coordinates pinned to the
        // boundary exactly, keep whichever side wins
        FreeCoords theta = locals[best].theta;
        std::array<bool, 6> active = all_active;
        for (int i = 0; i < 6; ++i) {
            const double u = sigmoid(theta[i]);
            if (u < 1e-6) { theta[i] = -kInf; active[i] = false; }
            if (u > 1 - 1e-6) { theta[i] = kInf; active[i] = false; }
        }
        LocalMax pinned = nelder_mead(obj, theta, active, opts.max_nm_iter, s, t, r);
        if (pinned.value > value) {
            value = pinned.value;
            free = pinned.free;
            arg = ScaledProfile::from_free(s, t, r, free);
        }
    }

    // max-dominance probes; a winning probe restarts the local search
    uint64_t probe_state = opts.seed ^ 0x9e3779b97f4a7c15ULL;
    for (int k = 0; k < opts.probes; ++k) {
        FreeCoords u;
        for (int i = 0; i < 6; ++i) u[i] = uniform01(probe_state);
        ScaledProfile sp = polytope_point(s, t, r, u);
        if (sp.violated_constraint()) continue;
        const double fv = objective_F(sp);
        if (fv > value) {
            FreeCoords theta;
            for (int i = 0; i < 6; ++i) theta[i] = logit(std::clamp(u[i], 1e-9, 1 - 1e-9));
            LocalMax lm = nelder_mead(obj, theta, all_active, opts.max_nm_iter, s, t, r);
            if (lm.value > value) { value = lm.value; free = lm.free; }
            value = std::max(value, fv);
            arg = ScaledProfile::from_free(s, t, r, free);
            res.boundary = arg.min_eta_argument() <= opts.boundary_eps;
        }
    }

    res.value = value;
    res.argmax = ScaledProfile::from_free(s, t, r, free);
    res.stationarity_residual = projected_residual(s, t, r, free);
    res.converged = res.stationarity_residual <= opts.stationarity_tol || res.boundary;
    return res;
}

LsRs ls_rs(double s, double r, const OptimizerOptions& opts) {
    LsRs out;
    out.product = rate_product(s, s, r, opts);
    out.ls = out.product.value;
    out.rs = 2 * rate_single(s, r);
    return out;
}

std::vector<SweepRow> sweep_r(double s, const std::vector<double>& r_values,
                              const OptimizerOptions& opts) {
    if (r_values.empty()) throw std::invalid_argument("sweep_r: empty r list");
    for (size_t i = 1; i < r_values.size(); ++i)
        if (!(r_values[i] > r_values[i - 1]))
            throw std::invalid_argument("sweep_r: r values must be ascending");
    std::vector<SweepRow> rows;
    for (double r : r_values) {
        LsRs v = ls_rs(s, r, opts);
        rows.push_back({r, v.ls, v.rs, v.ls - v.rs, v.product.converged});
    }
    return rows;
}

}  // namespace permprod
