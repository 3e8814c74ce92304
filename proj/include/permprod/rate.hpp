#pragma once

#include "permprod/scaled.hpp"

#include <cstdint>
#include <vector>

namespace permprod {

struct OptimizerOptions {
    int starts = 64;
    double stationarity_tol = 1e-10;
    uint64_t seed = 12345;
    int threads = 1;
    int probes = 1000;          // post-check points for max dominance
    int max_nm_iter = 4000;
    double boundary_eps = 1e-7;  // eta-argument threshold for boundary handling
};

struct RateResult {
    double value = 0;
    ScaledProfile argmax;
    double stationarity_residual = 0;  // boundary-projected max-norm gradient
    int starts_used = 0;
    bool converged = false;
    bool boundary = false;          // argmax has an eta argument at ~0
    bool multiple_maxima = false;   // two local maxima agree in value, differ in argmax
};

/// Stirling limit of (1/n) ln E(perm_m), m = s n:
///   -s ln s - 2(1-s) ln(1-s) - s + s ln r
double rate_single(double s, double r);

/// Maximum of objective_F over the feasible polytope (multi-start
/// Nelder-Mead through the unit-cube transform, Newton polish on
/// interior maxima). Symmetric in (s, t).
RateResult rate_product(double s, double t, double r, const OptimizerOptions& opts = {});

struct LsRs {
    double ls = 0;
    double rs = 0;
    RateResult product;  // diagnostics behind the LS value
};

/// (LS, RS) = (rate_product(s,s,r), 2 rate_single(s,r)).
LsRs ls_rs(double s, double r, const OptimizerOptions& opts = {});

struct SweepRow {
    double r = 0;
    double ls = 0;
    double rs = 0;
    double gap = 0;
    bool converged = false;
};

/// LS/RS gap table along ascending r values.
std::vector<SweepRow> sweep_r(double s, const std::vector<double>& r_values,
                              const OptimizerOptions& opts = {});

}  // namespace permprod
