#pragma once

#include <array>
#include <optional>
#include <string>

namespace permprod {

/// Free coordinates of the scaled overlap profile, in the order
/// (c, d, q, z, w, x). The remaining densities are determined:
/// a = s-c, b = t-c, abar = s-d, bbar = t-d, e = c-q-z-w-x.
using FreeCoords = std::array<double, 6>;

/// Scaled (n -> infinity) overlap profile with matching densities
/// m = s n, m' = t n and edge probability r/n.
struct ScaledProfile {
    double a = 0, b = 0, c = 0, d = 0;
    double abar = 0, bbar = 0;
    double q = 0, z = 0, w = 0, x = 0, e = 0;
    double s = 0, t = 0;
    double r = 1;

    static ScaledProfile from_free(double s, double t, double r, const FreeCoords& free);
    FreeCoords free() const { return {c, d, q, z, w, x}; }

    /// Name of the first violated feasibility constraint, or nullopt.
    /// `slack` loosens every inequality (useful at the boundary).
    std::optional<std::string> violated_constraint(double slack = 1e-12) const;

    /// Arguments fed to eta in the objective; the profile is on the
    /// feasible boundary iff any of these is ~0.
    std::array<double, 12> eta_arguments() const;

    double min_eta_argument() const;
};

/// Stirling map eta(x) = x ln x - x, with eta(0) = 0. Rejects x < 0.
double eta(double x);

/// The n -> infinity limit of (1/n) ln prod T_i at a feasible scaled
/// profile. Throws on infeasibility, naming the constraint.
double objective_F(const ScaledProfile& sp);

/// Gradient of objective_F in the free coordinates (c, d, q, z, w, x)
/// after substituting the determined densities. Requires a strictly
/// interior point (every eta argument > 0).
FreeCoords grad_F(const ScaledProfile& sp);

/// Signed density sum of the ln n coefficients of every factorial in
/// T2..T11 plus T1's -(s+t-q); identically zero on the feasible set
/// (the cancellation that makes the rate finite).
double lnn_coefficient(const ScaledProfile& sp);

/// Maps the unit cube onto the feasible polytope by sequential
/// interval fractions with lookahead bounds (surjective; every
/// coordinate's interval is nonempty for any u in [0,1]^6).
ScaledProfile polytope_point(double s, double t, double r, const FreeCoords& u);

/// Finite-n diagnostic: (1/n) ln term_product at the integer profile
/// closest to sp at side n, via log-gamma (T6 in its squared-falling
/// form, which is what the Stirling limit keeps).
double log_term_product_at(const ScaledProfile& sp, unsigned long long n);

/// Log-gamma evaluation of (1/n) ln [C(n,m)^2 m! (r/n)^m] at m = round(s n).
double log_single_at(double s, double r, unsigned long long n);

}  // namespace permprod
