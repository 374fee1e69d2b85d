#ifndef FTCAP_FIGURES_HPP
#define FTCAP_FIGURES_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "ftcap/capacity.hpp"

namespace ftcap {

/// Flat numeric table with a fixed column order. unit_columns lists the
/// indices carrying information units (nats), scaled by 1/ln 2 for bit output.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
  std::vector<int> unit_columns;

  void convert_to_bits();
};

/// CSV: header row, one record per line, 12 significant digits, '\n' endings.
void write_csv(const Table& table, std::ostream& out);

/// Array of row objects mirroring the CSV columns.
std::string to_json_string(const Table& table);

/// Discrete-path rate sweep, Eq.-(8)-style kernels: columns T, n, rate, shannon_rate.
Table fig1_table(const StationaryKernel& signal, const StationaryKernel& noise,
                 const std::vector<double>& T_list, int n_max);

/// Mutual information vs T * C_sh per power level: columns P, T, I_T, T_Csh, delta_I.
Table fig3_table(const std::vector<double>& P_list, double alpha, double n0,
                 double T_max, int T_steps);

/// Finite-time rate vs Shannon, sweep from near-zero T: columns P, alpha, T, C_T, C_sh.
Table fig45_table(const std::vector<double>& P_list, const std::vector<double>& alpha_list,
                  double n0, double T_min, double T_max, int T_steps);

/// Columns k, omega_k, lambda_k, trace_partial.
Table spectrum_table(double P, double alpha, double T, int K);

/// Single-row capacity report.
Table capacity_table(double P, double alpha, double n0, double T, double tail_tol);

/// Closed form vs quadrature for the exponential/AWGN pair.
Table shannon_table(double P, double alpha, double n0);

/// Quadrature-only Shannon value for an arbitrary kernel pair.
Table shannon_table(const StationaryKernel& signal, const NoiseModel& noise);

/// Columns n, I, rate.
Table mi_table(const StationaryKernel& signal, const NoiseModel& noise, double T,
               const std::vector<int>& n_list);

struct CheckResult {
  std::string name;
  bool passed;
  std::string detail;
};

struct CheckOptions {
  double P = 1.0;
  double alpha = 1.0;
  double n0 = 1.0;
  double T = 2.0;
  bool inject_omega_error = false;  // negative control for the residual check
};

/// Invariant suite: trace, trace-square, orthonormality, integral-equation
/// residual, cross-path MI, Shannon closed form, below-delta margin, and
/// small-T rate limit checks.
std::vector<CheckResult> run_check_suite(const CheckOptions& opt);

std::string check_results_json(const std::vector<CheckResult>& results);
void write_check_results_text(const std::vector<CheckResult>& results, std::ostream& out);

}  // namespace ftcap

#endif
