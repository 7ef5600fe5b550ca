#include "kendall/quadrature.hpp"

#include <boost/math/quadrature/tanh_sinh.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <string>

#include "kendall/errors.hpp"
#include "kendall/measure.hpp"

namespace kendall {

namespace {

// tanh_sinh reports its error estimate on the unit reference interval, so it
// is rescaled by the substitution factor to obtain an absolute estimate.
double integrate_piece(const std::function<double(double)>& f, double a, double b,
                       double* err_out) {
  static thread_local boost::math::quadrature::tanh_sinh<double> quad(15);
  double error = 0.0;
  double value = 0.0;
  try {
    value = quad.integrate(f, a, b, 1e-12, &error);
  } catch (const std::exception& e) {
    throw integration_error(std::string("integrate: ") + e.what());
  }
  *err_out = error * (std::isfinite(b) ? 0.5 * (b - a) : 2.0);
  return value;
}

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b,
                 const std::vector<double>& breakpoints, const QuadratureOptions& opts) {
  if (!(a <= b)) throw input_error("integrate: lower bound exceeds upper bound");
  if (a == b) return 0.0;

  std::vector<double> cuts;
  cuts.push_back(a);
  for (double x : breakpoints) {
    if (x > a && x < b && std::isfinite(x)) cuts.push_back(x);
  }
  cuts.push_back(b);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  double total = 0.0;
  double total_err = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    double err = 0.0;
    total += integrate_piece(f, cuts[i], cuts[i + 1], &err);
    total_err += err;
  }

  if (!std::isfinite(total) || total_err > std::max(opts.abs_tol, 1e-13 * std::fabs(total))) {
    std::ostringstream msg;
    msg << "integrate: error estimate " << total_err << " above tolerance " << opts.abs_tol
        << " on [" << a << ", " << b << "]";
    throw integration_error(msg.str());
  }
  return total;
}

double stieltjes_integral(const Measure& m, const std::function<double(double)>& g, double lo,
                          double hi, const QuadratureOptions& opts) {
  double total = 0.0;
  for (const Atom& atom : m.atoms) {
    if (atom.position >= lo && atom.position < hi) total += atom.mass * g(atom.position);
  }
  if (m.has_density()) {
    const double a = std::max(lo, m.density_lo);
    const double b = std::min(hi, m.density_hi);
    if (a < b) {
      total += integrate([&](double x) { return m.density(x) * g(x); }, a, b, m.breakpoints,
                         opts);
    }
  }
  return total;
}

}  // namespace kendall
