#include "permprod/bruteforce.hpp"
#include "permprod/exact.hpp"
#include "permprod/rate.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace permprod;

namespace {

std::string to_string(const ExactScalar& v) {
    std::ostringstream ss;
    ss << v;
    return ss.str();
}

py::dict profile_dict(const ScaledProfile& sp) {
    py::dict d;
    d["a"] = sp.a; d["b"] = sp.b; d["c"] = sp.c; d["d"] = sp.d;
    d["abar"] = sp.abar; d["bbar"] = sp.bbar;
    d["q"] = sp.q; d["z"] = sp.z; d["w"] = sp.w; d["x"] = sp.x; d["e"] = sp.e;
    d["s"] = sp.s; d["t"] = sp.t; d["r"] = sp.r;
    return d;
}

py::dict result_dict(const RateResult& res) {
    py::dict d;
    d["value"] = res.value;
    d["argmax"] = profile_dict(res.argmax);
    d["stationarity_residual"] = res.stationarity_residual;
    d["starts_used"] = res.starts_used;
    d["converged"] = res.converged;
    d["boundary"] = res.boundary;
    d["multiple_maxima"] = res.multiple_maxima;
    return d;
}

OptimizerOptions make_opts(int starts, uint64_t seed, double tol, int threads) {
    OptimizerOptions o;
    o.starts = starts;
    o.seed = seed;
    o.stationarity_tol = tol;
    o.threads = threads;
    return o;
}

}  // namespace

PYBIND11_MODULE(_permprod, m) {
    m.doc() = "Permanental-minor expectations in the Bernoulli 0-1 matrix ensemble";

    // exact rationals cross the boundary as "num/den" strings
    m.def("exact_single",
          [](unsigned n, unsigned mm, unsigned r) { return to_string(exact_single(n, mm, r)); },
          py::arg("n"), py::arg("m"), py::arg("r"),
          "E(perm_m) as an exact rational string");
    m.def("exact_product",
          [](unsigned n, unsigned mm, unsigned mp, unsigned r) {
              return to_string(exact_product(n, mm, mp, r));
          },
          py::arg("n"), py::arg("m"), py::arg("m_prime"), py::arg("r"),
          "E(perm_m perm_m') via the overlap-profile sum, exact rational string");
    m.def("brute_single",
          [](unsigned n, unsigned mm, unsigned r) { return to_string(brute_single(n, mm, r)); },
          py::arg("n"), py::arg("m"), py::arg("r"));
    m.def("brute_product",
          [](unsigned n, unsigned mm, unsigned mp, unsigned r) {
              return to_string(brute_product(n, mm, mp, r));
          },
          py::arg("n"), py::arg("m"), py::arg("m_prime"), py::arg("r"),
          "E(perm_m perm_m') by exhaustive pair enumeration");
    m.def("t6_exact",
          [](unsigned z, unsigned mm) { return to_string(t6_exact(z, mm)); },
          py::arg("z"), py::arg("m"));
    m.def("count_matchings",
          [](unsigned n, unsigned mm) { return enumerate_matchings(n, mm).size(); },
          py::arg("n"), py::arg("m"));
    m.def("count_profiles",
          [](unsigned n, unsigned mm, unsigned mp) {
              return enumerate_profiles(n, mm, mp).size();
          },
          py::arg("n"), py::arg("m"), py::arg("m_prime"));
    m.def("mc_estimate_single",
          [](unsigned n, unsigned mm, unsigned r, uint64_t samples, uint64_t seed) {
              McEstimate est = mc_estimate_single(n, mm, r, samples, seed);
              return py::make_tuple(est.mean, est.std_error);
          },
          py::arg("n"), py::arg("m"), py::arg("r"), py::arg("samples"), py::arg("seed"));

    m.def("rate_single", &rate_single, py::arg("s"), py::arg("r"),
          "Stirling-limit rate of E(perm_m), m = s n");
    m.def("rate_product",
          [](double s, double t, double r, int starts, uint64_t seed, double tol, int threads) {
              return result_dict(rate_product(s, t, r, make_opts(starts, seed, tol, threads)));
          },
          py::arg("s"), py::arg("t"), py::arg("r"), py::arg("starts") = 64,
          py::arg("seed") = 12345, py::arg("tol") = 1e-10, py::arg("threads") = 1,
          "Maximized product rate with optimizer diagnostics");
    m.def("ls_rs",
          [](double s, double r, int starts, uint64_t seed, double tol, int threads) {
              LsRs v = ls_rs(s, r, make_opts(starts, seed, tol, threads));
              return py::make_tuple(v.ls, v.rs);
          },
          py::arg("s"), py::arg("r"), py::arg("starts") = 64, py::arg("seed") = 12345,
          py::arg("tol") = 1e-10, py::arg("threads") = 1);
    m.def("sweep_r",
          [](double s, const std::vector<double>& r_values, int starts, uint64_t seed,
             double tol, int threads) {
              std::vector<py::dict> rows;
              for (const SweepRow& row : sweep_r(s, r_values, make_opts(starts, seed, tol, threads))) {
                  py::dict d;
                  d["r"] = row.r;
                  d["ls"] = row.ls;
                  d["rs"] = row.rs;
                  d["gap"] = row.gap;
                  d["converged"] = row.converged;
                  rows.push_back(d);
              }
              return rows;
          },
          py::arg("s"), py::arg("r_values"), py::arg("starts") = 64, py::arg("seed") = 12345,
          py::arg("tol") = 1e-10, py::arg("threads") = 1);
}
