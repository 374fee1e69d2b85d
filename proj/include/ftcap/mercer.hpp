#ifndef FTCAP_MERCER_HPP
#define FTCAP_MERCER_HPP

#include <vector>

#include "ftcap/covariance.hpp"
#include "ftcap/kernels.hpp"

namespace ftcap {

/// One eigenpair of the exponential-kernel integral operator on [0, T]:
///   phi_k(t) = (omega cos(omega t) + alpha sin(omega t)) / z
/// with omega the k-th root of 2 atan(omega/alpha) = k pi - omega T and
/// lambda = 2 alpha P / (alpha^2 + omega^2).
struct EigenPair {
  int k = 0;            // 1-based index
  double omega = 0.0;   // rad/s, strictly inside ((k-1) pi / T, k pi / T)
  double lambda = 0.0;  // power * seconds
  double z = 0.0;       // L2([0,T]) normalization of omega cos + alpha sin
  double alpha = 0.0;
  double T = 0.0;
};

struct MercerSpectrum {
  double P = 0.0;
  double alpha = 0.0;
  double T = 0.0;
  std::vector<EigenPair> pairs;  // ascending k
  double trace_partial = 0.0;    // sum of included lambda_k, <= P T
  double trace_deficit() const { return P * T - trace_partial; }
};

/// Root of g(omega) = 2 atan(omega/alpha) + omega T - k pi by bisection on
/// ((k-1) pi / T, k pi / T); g is strictly increasing there and changes sign.
double omega_root(int k, double alpha, double T, double tol);

/// Closed-form Z with Z^2 = int_0^T (omega cos(omega t) + alpha sin(omega t))^2 dt.
double normalization_constant(double omega, double alpha, double T);

struct SpectrumBudget {
  int max_pairs = 100000;
  double trace_tol = 0.0;  // stop once P T - trace_partial < trace_tol (0 = never)
};

/// Eigenpairs k = 1..K in ascending order. The closed-form Z of the first few
/// pairs is verified against quadrature at build time.
MercerSpectrum exponential_spectrum(double P, double alpha, double T,
                                    const SpectrumBudget& budget = {});

/// phi_k(t); t must lie in [0, T].
double eigenfunction_eval(const EigenPair& pair, double t);

/// max over probe points s of |lambda phi(s) - int_0^T P e^{-alpha |s-t|} phi(t) dt|,
/// the integral by adaptive quadrature split at t = s.
double integral_equation_residual(const EigenPair& pair, double P, int probe_points);

/// Top eigenvalues of (T/n) * K on the uniform grid, descending.
std::vector<double> nystrom_spectrum(const StationaryKernel& kernel, double T, int n,
                                     int top_m);

/// tr(M^2) = sum lambda_k^2 = (P^2/alpha) (T - (1 - e^{-2 alpha T}) / (2 alpha)).
double trace_square_closed(double P, double alpha, double T);

}  // namespace ftcap

#endif
