#ifndef FTCAP_CAPACITY_HPP
#define FTCAP_CAPACITY_HPP

#include <stdexcept>
#include <vector>

#include "ftcap/covariance.hpp"
#include "ftcap/mercer.hpp"

namespace ftcap {

struct InsufficientSpectrumDepth : std::runtime_error {
  double tail_bound;
  double tail_tol;
  InsufficientSpectrumDepth(double bound, double tol);
};

struct DivergentCapacity : std::runtime_error {
  explicit DivergentCapacity(const std::string& why);
};

struct SeriesMi {
  double mi = 0.0;         // I(T) [nats]
  int k_used = 0;
  double tail_bound = 0.0;  // truncation bound (P T - trace_partial) / n0 [nats]
};

/// I(T) = (1/2) sum_k log(1 + lambda_k / (n0/2)), ascending k, compensated
/// summation. Throws InsufficientSpectrumDepth if the tail bound exceeds tail_tol.
SeriesMi finite_time_mi(const MercerSpectrum& spectrum, double n0, double tail_tol);

/// C_sh = (1/2) int log(1 + S_X(f) / S_N(f)) df  [nats/s], adaptive quadrature,
/// infinite domain mapped rationally; band-limited signals clipped to their band.
/// Throws DivergentCapacity when the integrand does not decay.
double shannon_capacity_quadrature(const StationaryKernel& signal, const NoiseModel& noise);

/// Closed form for the exponential signal over AWGN:
/// C_sh = (1/2) (sqrt(alpha^2 + 4 P alpha / n0) - alpha).
double shannon_capacity_exponential(double P, double alpha, double n0);

/// C(0+) = P / n0.
double instant_rate(double P, double n0);

/// delta = n0 alpha psi(2 alpha T) / (1 - psi(2 alpha T))^2, psi(x) = (1 - e^{-x})/x.
double exceed_delta(double n0, double alpha, double T);

struct CapacityReport {
  double T = 0.0;
  double I_T = 0.0;         // nats
  double C_T = 0.0;         // nats/s
  double C_sh = 0.0;        // nats/s
  double margin = 0.0;      // C_T - C_sh
  int K_used = 0;
  double tail_bound = 0.0;  // nats
  double delta = 0.0;       // power threshold guaranteeing C_T > C_sh
  bool below_delta = false;
};

constexpr double kDefaultTailTol = 5e-3;  // nats
constexpr int kDefaultMaxPairs = 100000;

/// Full exponential-kernel/AWGN comparison. When P < delta the margin is
/// guaranteed positive and asserted before return.
CapacityReport exceed_shannon_report(double P, double alpha, double n0, double T,
                                     double tail_tol = kDefaultTailTol);

struct DeltaIPoint {
  double T;
  double delta_I;  // I(T) - T * C_sh [nats]
};

std::vector<DeltaIPoint> delta_I_asymptote(double P, double alpha, double n0,
                                           const std::vector<double>& T_list);

}  // namespace ftcap

#endif
