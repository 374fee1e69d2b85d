#include "ftcap/covariance.hpp"

#include <cmath>
#include <string>

namespace ftcap {

SampleGrid uniform_grid(double T, int n) {
  if (!(T > 0.0)) throw std::invalid_argument("uniform_grid: T must be > 0");
  if (n < 1) throw std::invalid_argument("uniform_grid: n must be >= 1");
  return SampleGrid{T, n};
}

NotPositiveDefinite::NotPositiveDefinite(int pivot_index)
    : std::runtime_error("matrix not positive definite (pivot " +
                         std::to_string(pivot_index) + ")"),
      pivot(pivot_index) {}

Eigen::MatrixXd covariance_matrix(const StationaryKernel& kernel, const SampleGrid& grid) {
  const int n = grid.n;
  Eigen::MatrixXd K(n, n);
  for (int j = 0; j < n; ++j) {
    K(j, j) = autocorrelation(kernel, 0.0);
    for (int i = j + 1; i < n; ++i) {
      const double v = autocorrelation(kernel, grid.instant(i) - grid.instant(j));
      K(i, j) = v;
      K(j, i) = v;
    }
  }
  return K;
}

Eigen::MatrixXd awgn_sample_covariance(double n0, const SampleGrid& grid) {
  if (!(n0 > 0.0)) throw std::invalid_argument("awgn_sample_covariance: n0 must be > 0");
  const double var = n0 * grid.n / (2.0 * grid.T);
  return Eigen::MatrixXd::Identity(grid.n, grid.n) * var;
}

double logdet_spd(const Eigen::MatrixXd& M) {
  const Eigen::Index n = M.rows();
  if (M.cols() != n) throw std::invalid_argument("logdet_spd: matrix must be square");

  // Left-looking Cholesky, accumulating log of the squared pivots.
  Eigen::MatrixXd L(n, n);
  double logdet = 0.0;
  for (Eigen::Index j = 0; j < n; ++j) {
    Eigen::VectorXd col = M.col(j).segment(j, n - j);
    if (j > 0)
      col.noalias() -= L.block(j, 0, n - j, j) * L.row(j).head(j).transpose();
    const double d = col(0);
    if (!(d > 0.0) || !std::isfinite(d)) throw NotPositiveDefinite(static_cast<int>(j));
    logdet += std::log(d);
    L.col(j).segment(j, n - j) = col / std::sqrt(d);
  }
  return logdet;
}

double discrete_mutual_information(const Eigen::MatrixXd& K_X, const Eigen::MatrixXd& K_N) {
  if (K_X.rows() != K_N.rows() || K_X.cols() != K_N.cols())
    throw std::invalid_argument("discrete_mutual_information: dimension mismatch");
  return 0.5 * (logdet_spd(K_X + K_N) - logdet_spd(K_N));
}

Eigen::MatrixXd noise_covariance(const NoiseModel& noise, const SampleGrid& grid) {
  if (const auto* awgn = std::get_if<AwgnNoise>(&noise))
    return awgn_sample_covariance(awgn->n0, grid);
  return covariance_matrix(std::get<StationaryKernel>(noise), grid);
}

std::vector<MiPoint> mi_vs_n(const StationaryKernel& signal, const NoiseModel& noise,
                             double T, const std::vector<int>& n_list) {
  if (n_list.empty()) throw std::invalid_argument("mi_vs_n: n_list must be nonempty");
  std::vector<MiPoint> out;
  out.reserve(n_list.size());
  for (int n : n_list) {
    const SampleGrid grid = uniform_grid(T, n);
    const Eigen::MatrixXd K_X = covariance_matrix(signal, grid);
    const Eigen::MatrixXd K_N = noise_covariance(noise, grid);
    try {
      const double mi = discrete_mutual_information(K_X, K_N);
      out.push_back({n, mi, mi / T});
    } catch (const NotPositiveDefinite& e) {
      throw std::runtime_error("mi_vs_n: factorization failed at n = " +
                               std::to_string(n) + ": " + e.what());
    }
  }
  return out;
}

}  // namespace ftcap
