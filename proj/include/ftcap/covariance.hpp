#ifndef FTCAP_COVARIANCE_HPP
#define FTCAP_COVARIANCE_HPP

#include <Eigen/Dense>
#include <stdexcept>
#include <variant>
#include <vector>

#include "ftcap/kernels.hpp"

namespace ftcap {

/// Uniform sampling instants t_i = (i-1) T / n on [0, T), 1 <= i <= n
/// (zero-based index in code: instant(i) = i T / n, 0 <= i < n).
struct SampleGrid {
  double T = 0.0;
  int n = 0;
  double instant(int i) const { return static_cast<double>(i) * T / n; }
};

SampleGrid uniform_grid(double T, int n);

struct NotPositiveDefinite : std::runtime_error {
  int pivot;  // zero-based index of the failing Cholesky pivot
  explicit NotPositiveDefinite(int pivot_index);
};

/// K_{ij} = R(t_i - t_j); symmetric with R(0) on the diagonal.
Eigen::MatrixXd covariance_matrix(const StationaryKernel& kernel, const SampleGrid& grid);

/// Filtered-AWGN sample covariance: diag entries (n0 n)/(2 T), n0 the
/// two-sided PSD level times two (noise density n0/2).
Eigen::MatrixXd awgn_sample_covariance(double n0, const SampleGrid& grid);

/// log det of a symmetric positive-definite matrix via unblocked Cholesky;
/// throws NotPositiveDefinite with the failing pivot index.
double logdet_spd(const Eigen::MatrixXd& M);

/// I = (1/2) (log det(K_X + K_N) - log det(K_N))  [nats]
double discrete_mutual_information(const Eigen::MatrixXd& K_X, const Eigen::MatrixXd& K_N);

struct AwgnNoise {
  double n0;  // noise density is n0/2
};
using NoiseModel = std::variant<StationaryKernel, AwgnNoise>;

Eigen::MatrixXd noise_covariance(const NoiseModel& noise, const SampleGrid& grid);

struct MiPoint {
  int n;
  double mi;    // I(t_1^n) [nats]
  double rate;  // I / T [nats/s]
};

/// Discrete-path MI across grid sizes; factorization failures are rethrown
/// annotated with the offending n.
std::vector<MiPoint> mi_vs_n(const StationaryKernel& signal, const NoiseModel& noise,
                             double T, const std::vector<int>& n_list);

}  // namespace ftcap

#endif
