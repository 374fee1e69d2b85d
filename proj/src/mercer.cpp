#include "ftcap/mercer.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "ftcap/quadrature.hpp"

namespace ftcap {

namespace {
constexpr double kPi = std::numbers::pi;
}

double omega_root(int k, double alpha, double T, double tol) {
  if (k < 1) throw std::invalid_argument("omega_root: k must be >= 1");
  if (!(alpha > 0.0) || !(T > 0.0) || !(tol > 0.0))
    throw std::invalid_argument("omega_root: alpha, T, tol must be > 0");

  auto g = [&](double w) { return 2.0 * std::atan(w / alpha) + w * T - k * kPi; };

  double lo = (k - 1) * kPi / T;
  double hi = k * kPi / T;
  // g(lo) < 0 since 2 atan < pi; g(hi) > 0 since atan > 0. Stop at the
  // requested width or once the bracket collapses to adjacent doubles.
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (g(mid) < 0.0)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

double normalization_constant(double omega, double alpha, double T) {
  if (!(omega > 0.0) || !(alpha > 0.0) || !(T > 0.0))
    throw std::invalid_argument("normalization_constant: arguments must be > 0");
  const double s2 = std::sin(2.0 * omega * T);
  const double c2 = std::cos(2.0 * omega * T);
  const double z2 = 0.5 * (omega * omega + alpha * alpha) * T +
                    (omega * omega - alpha * alpha) * s2 / (4.0 * omega) +
                    0.5 * alpha * (1.0 - c2);
  return std::sqrt(z2);
}

MercerSpectrum exponential_spectrum(double P, double alpha, double T,
                                    const SpectrumBudget& budget) {
  if (!(P >= 0.0) || !(alpha > 0.0) || !(T > 0.0))
    throw std::invalid_argument("exponential_spectrum: P >= 0, alpha > 0, T > 0 required");

  MercerSpectrum sp;
  sp.P = P;
  sp.alpha = alpha;
  sp.T = T;

  const double root_tol = 1e-12 * kPi / T;
  const double energy = P * T;
  for (int k = 1; k <= budget.max_pairs; ++k) {
    if (budget.trace_tol > 0.0 && energy - sp.trace_partial < budget.trace_tol) break;
    EigenPair p;
    p.k = k;
    p.omega = omega_root(k, alpha, T, root_tol);
    p.lambda = 2.0 * alpha * P / (alpha * alpha + p.omega * p.omega);
    p.z = normalization_constant(p.omega, alpha, T);
    p.alpha = alpha;
    p.T = T;
    sp.trace_partial += p.lambda;
    sp.pairs.push_back(p);
  }

  // Closed-form Z self-check on the leading pairs; a slip here would only
  // surface later as broken orthonormality.
  const int check = std::min<int>(8, static_cast<int>(sp.pairs.size()));
  for (int i = 0; i < check; ++i) {
    const EigenPair& p = sp.pairs[i];
    const double z2_quad = integrate_adaptive(
        [&](double t) {
          const double v = p.omega * std::cos(p.omega * t) + alpha * std::sin(p.omega * t);
          return v * v;
        },
        0.0, T, 1e-12 * p.z * p.z, 48, oscillation_depth(2.0 * p.omega, T));
    if (std::abs(z2_quad - p.z * p.z) > 1e-10 * p.z * p.z)
      throw std::logic_error("exponential_spectrum: Z normalization self-check failed");
  }
  return sp;
}

double eigenfunction_eval(const EigenPair& pair, double t) {
  if (t < 0.0 || t > pair.T)
    throw std::invalid_argument("eigenfunction_eval: t outside [0, T]");
  return (pair.omega * std::cos(pair.omega * t) + pair.alpha * std::sin(pair.omega * t)) /
         pair.z;
}

double integral_equation_residual(const EigenPair& pair, double P, int probe_points) {
  if (probe_points < 1)
    throw std::invalid_argument("integral_equation_residual: probe_points must be >= 1");
  const double T = pair.T;
  const double alpha = pair.alpha;
  double worst = 0.0;
  for (int i = 0; i < probe_points; ++i) {
    const double s = probe_points == 1 ? 0.5 * T : T * i / (probe_points - 1);
    auto integrand = [&](double t) {
      return P * std::exp(-alpha * std::abs(s - t)) * eigenfunction_eval(pair, t);
    };
    const double tol = 1e-13 * std::max(1.0, pair.lambda);
    const int depth = oscillation_depth(pair.omega, T);
    const double ival = integrate_adaptive(integrand, 0.0, s, tol, 48, depth) +
                        integrate_adaptive(integrand, s, T, tol, 48, depth);
    worst = std::max(worst, std::abs(pair.lambda * eigenfunction_eval(pair, s) - ival));
  }
  return worst;
}

std::vector<double> nystrom_spectrum(const StationaryKernel& kernel, double T, int n,
                                     int top_m) {
  if (n < 1 || top_m < 1 || top_m > n)
    throw std::invalid_argument("nystrom_spectrum: need n >= top_m >= 1");
  const SampleGrid grid = uniform_grid(T, n);
  Eigen::MatrixXd K = covariance_matrix(kernel, grid) * (T / n);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(K, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("nystrom_spectrum: eigendecomposition failed");
  // Eigen returns ascending order.
  std::vector<double> top(top_m);
  for (int i = 0; i < top_m; ++i) top[i] = es.eigenvalues()(n - 1 - i);
  return top;
}

double trace_square_closed(double P, double alpha, double T) {
  if (!(P >= 0.0) || !(alpha > 0.0) || !(T > 0.0))
    throw std::invalid_argument("trace_square_closed: P >= 0, alpha > 0, T > 0 required");
  return P * P / alpha * (T - (1.0 - std::exp(-2.0 * alpha * T)) / (2.0 * alpha));
}

}  // namespace ftcap
