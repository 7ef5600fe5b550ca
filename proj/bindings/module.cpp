// Python bindings for the Kendall random walk library.

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "kendall/asymptotics.hpp"
#include "kendall/catalog.hpp"
#include "kendall/errors.hpp"
#include "kendall/kernels.hpp"
#include "kendall/renewal.hpp"
#include "kendall/verify.hpp"
#include "kendall/walk.hpp"
#include "kendall/williamson.hpp"

namespace py = pybind11;

namespace {

kendall::StepDistribution resolve(const std::string& name, const std::vector<double>& params,
                                  double alpha) {
  return kendall::catalog_lookup(name, params, alpha);
}

kendall::WalkConfig make_config(const std::string& name, const std::vector<double>& params,
                                double alpha, std::uint64_t seed) {
  kendall::WalkConfig cfg;
  cfg.alpha = alpha;
  cfg.step = resolve(name, params, alpha);
  cfg.seed = seed;
  return cfg;
}

}  // namespace

PYBIND11_MODULE(kendallwalk, m) {
  m.doc() = "Kendall random walk: renewal analysis, simulation and verification";

  py::register_exception<kendall::parameter_error>(m, "ParameterError", PyExc_ValueError);
  py::register_exception<kendall::input_error>(m, "InputError", PyExc_ValueError);
  py::register_exception<kendall::divergence_error>(m, "DivergenceError", PyExc_ArithmeticError);
  py::register_exception<kendall::integration_error>(m, "IntegrationError",
                                                     PyExc_ArithmeticError);
  py::register_exception<kendall::runaway_error>(m, "RunawayError", PyExc_RuntimeError);

  m.def("catalog", []() {
    py::list out;
    for (const auto& e : kendall::catalog_entries()) {
      py::dict d;
      d["name"] = e.name;
      d["parameters"] = e.param_names;
      d["description"] = e.description;
      out.append(d);
    }
    return out;
  });

  m.def(
      "williamson",
      [](const std::string& dist, const std::vector<double>& params, double alpha, double t) {
        const auto e = kendall::eval_transform(resolve(dist, params, alpha), alpha, t);
        py::dict d;
        d["G"] = e.G;
        d["Gbar"] = e.Gbar;
        d["H"] = e.H;
        d["F"] = e.F;
        d["Fbar"] = e.Fbar;
        return d;
      },
      py::arg("dist"), py::arg("params"), py::arg("alpha"), py::arg("t"));

  m.def(
      "nfold_cdf",
      [](const std::string& dist, const std::vector<double>& params, double alpha, int n,
         double t) { return kendall::nfold_cdf(resolve(dist, params, alpha), alpha, n, t); },
      py::arg("dist"), py::arg("params"), py::arg("alpha"), py::arg("n"), py::arg("t"));

  m.def(
      "renewal",
      [](const std::string& dist, const std::vector<double>& params, double alpha, double t) {
        const auto e = kendall::renewal_moments(resolve(dist, params, alpha), alpha, t);
        py::dict d;
        d["t"] = e.t;
        d["R"] = e.R;
        d["EN2"] = e.EN2;
        d["VarN"] = e.VarN;
        return d;
      },
      py::arg("dist"), py::arg("params"), py::arg("alpha"), py::arg("t"));

  m.def(
      "renewal_R",
      [](const std::string& dist, const std::vector<double>& params, double alpha, double t) {
        return kendall::renewal_R(resolve(dist, params, alpha), alpha, t);
      },
      py::arg("dist"), py::arg("params"), py::arg("alpha"), py::arg("t"));

  m.def(
      "series_R",
      [](const std::string& dist, const std::vector<double>& params, double alpha, double t,
         double tol) {
        return kendall::series_R(resolve(dist, params, alpha), alpha, t, tol);
      },
      py::arg("dist"), py::arg("params"), py::arg("alpha"), py::arg("t"),
      py::arg("tol") = 1e-13);

  m.def(
      "pmf",
      [](const std::string& dist, const std::vector<double>& params, double alpha, double t,
         int nmax) {
        const auto law = resolve(dist, params, alpha);
        std::vector<double> out;
        for (int n = 0; n <= nmax; ++n) {
          out.push_back(kendall::counting_pmf(law, alpha, t, n));
        }
        return out;
      },
      py::arg("dist"), py::arg("params"), py::arg("alpha"), py::arg("t"), py::arg("nmax"));

  m.def(
      "pgf",
      [](const std::string& dist, const std::vector<double>& params, double alpha, double t,
         double z) { return kendall::counting_pgf(resolve(dist, params, alpha), alpha, t, z); },
      py::arg("dist"), py::arg("params"), py::arg("alpha"), py::arg("t"), py::arg("z"));

  m.def(
      "char_fn",
      [](const std::string& dist, const std::vector<double>& params, double alpha, double t) {
        return kendall::char_fn(resolve(dist, params, alpha),
                                kendall::ConvolutionKernel::kendall(alpha), t);
      },
      py::arg("dist"), py::arg("params"), py::arg("alpha"), py::arg("t"));

  m.def(
      "sample_path",
      [](const std::string& dist, const std::vector<double>& params, double alpha, int n,
         std::uint64_t seed, std::uint64_t path_index) {
        return kendall::sample_path(make_config(dist, params, alpha, seed), n, path_index)
            .values;
      },
      py::arg("dist"), py::arg("params"), py::arg("alpha"), py::arg("n"), py::arg("seed"),
      py::arg("path_index") = 0);

  m.def(
      "count_renewals",
      [](const std::string& dist, const std::vector<double>& params, double alpha, double t,
         std::uint64_t seed, std::uint64_t path_index) {
        return kendall::count_renewals(make_config(dist, params, alpha, seed), t, path_index);
      },
      py::arg("dist"), py::arg("params"), py::arg("alpha"), py::arg("t"), py::arg("seed"),
      py::arg("path_index") = 0);

  m.def(
      "mc_renewal_stats",
      [](const std::string& dist, const std::vector<double>& params, double alpha, double t,
         long long n_sims, std::uint64_t seed, int threads) {
        const auto s = kendall::mc_renewal_stats(make_config(dist, params, alpha, seed), t,
                                                 n_sims, threads);
        py::dict d;
        d["mean"] = s.mean;
        d["variance"] = s.variance;
        d["se_mean"] = s.se_mean;
        d["se_variance"] = s.se_variance;
        d["n_sims"] = s.n_sims;
        return d;
      },
      py::arg("dist"), py::arg("params"), py::arg("alpha"), py::arg("t"), py::arg("n_sims"),
      py::arg("seed"), py::arg("threads") = 0);

  m.def(
      "limit_law",
      [](const std::string& dist, const std::vector<double>& params, double alpha, double t,
         long long n_sims, std::uint64_t seed, int threads) {
        const auto r = kendall::limit_law_simulation(make_config(dist, params, alpha, seed), t,
                                                     n_sims, threads);
        py::dict d;
        d["mean"] = r.mean;
        d["variance"] = r.variance;
        d["ks"] = r.ks;
        d["mixture_weight"] = r.mixture_weight;
        d["gbar"] = r.gbar;
        d["n_sims"] = r.n_sims;
        return d;
      },
      py::arg("dist"), py::arg("params"), py::arg("alpha"), py::arg("t"), py::arg("n_sims"),
      py::arg("seed"), py::arg("threads") = 0);

  m.def(
      "asymptotics",
      [](const std::string& dist, const std::vector<double>& params, double alpha, double x,
         double h) {
        py::list out;
        for (const auto& r :
             kendall::asymptotics_suite(resolve(dist, params, alpha), alpha, x, h)) {
          py::dict d;
          d["quantity"] = r.quantity;
          d["x"] = r.x;
          d["finite"] = r.finite_value;
          d["limit"] = r.limit_value;
          d["rel_error"] = r.rel_error;
          out.append(d);
        }
        return out;
      },
      py::arg("dist"), py::arg("params"), py::arg("alpha"), py::arg("x"), py::arg("h") = 1.0);

  m.def(
      "verify",
      [](const std::string& suite, int threads) {
        kendall::VerifyOptions opts;
        opts.n_threads = threads;
        py::list out;
        for (const auto& r : kendall::run_suite(suite, opts)) {
          py::dict d;
          d["id"] = r.id;
          d["name"] = r.name;
          d["pass"] = r.pass;
          d["seconds"] = r.seconds;
          d["detail"] = r.detail;
          out.append(d);
        }
        return out;
      },
      py::arg("suite"), py::arg("threads") = 0);
}
