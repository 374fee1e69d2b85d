#include "ftcap/figures.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <random>

#include <json.hpp>

#include "ftcap/quadrature.hpp"

namespace ftcap {

namespace {

std::string fmt12(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::string fmt6(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

}  // namespace

void Table::convert_to_bits() {
  const double ln2 = std::numbers::ln2;
  for (auto& row : rows)
    for (int c : unit_columns) row[c] /= ln2;
}

void write_csv(const Table& table, std::ostream& out) {
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    if (i) out << ',';
    out << table.columns[i];
  }
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << ',';
      out << fmt12(row[i]);
    }
    out << '\n';
  }
}

std::string to_json_string(const Table& table) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    nlohmann::ordered_json obj;
    for (std::size_t i = 0; i < row.size(); ++i) obj[table.columns[i]] = row[i];
    arr.push_back(std::move(obj));
  }
  return arr.dump(2) + "\n";
}

Table fig1_table(const StationaryKernel& signal, const StationaryKernel& noise,
                 const std::vector<double>& T_list, int n_max) {
  Table t;
  t.columns = {"T", "n", "rate", "shannon_rate"};
  t.unit_columns = {2, 3};
  const double c_sh = shannon_capacity_quadrature(signal, noise);
  std::vector<int> n_list;
  for (int n = 2; n <= n_max; n *= 2) n_list.push_back(n);
  for (double T : T_list) {
    const auto points = mi_vs_n(signal, noise, T, n_list);
    for (const MiPoint& p : points)
      t.rows.push_back({T, static_cast<double>(p.n), p.rate, c_sh});
  }
  return t;
}

Table fig3_table(const std::vector<double>& P_list, double alpha, double n0,
                 double T_max, int T_steps) {
  Table t;
  t.columns = {"P", "T", "I_T", "T_Csh", "delta_I"};
  t.unit_columns = {2, 3, 4};
  for (double P : P_list) {
    const double c_sh = shannon_capacity_exponential(P, alpha, n0);
    for (int j = 1; j <= T_steps; ++j) {
      const double T = T_max * j / T_steps;
      const CapacityReport rep = exceed_shannon_report(P, alpha, n0, T);
      t.rows.push_back({P, T, rep.I_T, T * c_sh, rep.I_T - T * c_sh});
    }
  }
  return t;
}

Table fig45_table(const std::vector<double>& P_list, const std::vector<double>& alpha_list,
                  double n0, double T_min, double T_max, int T_steps) {
  Table t;
  t.columns = {"P", "alpha", "T", "C_T", "C_sh"};
  t.unit_columns = {3, 4};
  for (double alpha : alpha_list) {
    for (double P : P_list) {
      for (int j = 0; j < T_steps; ++j) {
        const double T = T_steps == 1
                             ? T_min
                             : T_min * std::pow(T_max / T_min,
                                                static_cast<double>(j) / (T_steps - 1));
        const CapacityReport rep = exceed_shannon_report(P, alpha, n0, T);
        t.rows.push_back({P, alpha, T, rep.C_T, rep.C_sh});
      }
    }
  }
  return t;
}

Table spectrum_table(double P, double alpha, double T, int K) {
  Table t;
  t.columns = {"k", "omega_k", "lambda_k", "trace_partial"};
  SpectrumBudget budget;
  budget.max_pairs = K;
  const MercerSpectrum sp = exponential_spectrum(P, alpha, T, budget);
  double partial = 0.0;
  for (const EigenPair& p : sp.pairs) {
    partial += p.lambda;
    t.rows.push_back({static_cast<double>(p.k), p.omega, p.lambda, partial});
  }
  return t;
}

Table capacity_table(double P, double alpha, double n0, double T, double tail_tol) {
  Table t;
  t.columns = {"T", "I_T", "C_T", "C_sh", "margin", "K_used", "tail_bound", "delta",
               "below_delta"};
  t.unit_columns = {1, 2, 3, 4, 6};
  const CapacityReport rep = exceed_shannon_report(P, alpha, n0, T, tail_tol);
  t.rows.push_back({rep.T, rep.I_T, rep.C_T, rep.C_sh, rep.margin,
                    static_cast<double>(rep.K_used), rep.tail_bound, rep.delta,
                    rep.below_delta ? 1.0 : 0.0});
  return t;
}

Table shannon_table(double P, double alpha, double n0) {
  Table t;
  t.columns = {"P", "alpha", "n0", "C_sh_closed", "C_sh_quadrature"};
  t.unit_columns = {3, 4};
  const double closed = shannon_capacity_exponential(P, alpha, n0);
  const double quad = shannon_capacity_quadrature(StationaryKernel::Exponential(P, alpha),
                                                  AwgnNoise{n0});
  t.rows.push_back({P, alpha, n0, closed, quad});
  return t;
}

Table shannon_table(const StationaryKernel& signal, const NoiseModel& noise) {
  Table t;
  t.columns = {"C_sh_quadrature"};
  t.unit_columns = {0};
  t.rows.push_back({shannon_capacity_quadrature(signal, noise)});
  return t;
}

Table mi_table(const StationaryKernel& signal, const NoiseModel& noise, double T,
               const std::vector<int>& n_list) {
  Table t;
  t.columns = {"n", "I", "rate"};
  t.unit_columns = {1, 2};
  for (const MiPoint& p : mi_vs_n(signal, noise, T, n_list))
    t.rows.push_back({static_cast<double>(p.n), p.mi, p.rate});
  return t;
}

std::vector<CheckResult> run_check_suite(const CheckOptions& opt) {
  std::vector<CheckResult> results;
  const double P = opt.P, alpha = opt.alpha, n0 = opt.n0, T = opt.T;
  constexpr double kPi = std::numbers::pi;

  SpectrumBudget budget;
  budget.max_pairs = 100000;
  const MercerSpectrum sp = exponential_spectrum(P, alpha, T, budget);

  {  // partial eigenvalue sums must approach the signal energy P T
    const double deficit = sp.trace_deficit();
    const double tail_est = 2.0 * alpha * P * T * T / (kPi * kPi * sp.pairs.size());
    const bool ok = deficit >= 0.0 && deficit <= 1.5 * tail_est;
    results.push_back({"trace-identity",
                       ok,
                       "PT=" + fmt6(P * T) + " deficit=" + fmt6(deficit) +
                           " tail_est=" + fmt6(tail_est)});
  }

  {  // trace of the squared operator vs its closed form
    double s2 = 0.0;
    for (auto it = sp.pairs.rbegin(); it != sp.pairs.rend(); ++it)
      s2 += it->lambda * it->lambda;
    const double closed = trace_square_closed(P, alpha, T);
    const double rel = std::abs(s2 - closed) / closed;
    results.push_back({"trace-square", rel <= 1e-6,
                       "series=" + fmt6(s2) + " closed=" + fmt6(closed) +
                           " rel=" + fmt6(rel)});
  }

  {  // orthonormality of the leading eigenfunctions
    double worst = 0.0;
    const int m = std::min<int>(10, static_cast<int>(sp.pairs.size()));
    for (int i = 0; i < m; ++i)
      for (int j = i; j < m; ++j) {
        const double g = integrate_adaptive(
            [&](double t) {
              return eigenfunction_eval(sp.pairs[i], t) * eigenfunction_eval(sp.pairs[j], t);
            },
            0.0, T, 1e-10, 48,
            oscillation_depth(sp.pairs[i].omega + sp.pairs[j].omega, T));
        worst = std::max(worst, std::abs(g - (i == j ? 1.0 : 0.0)));
      }
    results.push_back(
        {"orthonormality", worst <= 1e-7, "max_gram_deviation=" + fmt6(worst)});
  }

  {  // characteristic integral equation residual
    bool ok = true;
    double worst_rel = 0.0;
    const int m = std::min<int>(10, static_cast<int>(sp.pairs.size()));
    for (int i = 0; i < m; ++i) {
      EigenPair pair = sp.pairs[i];
      if (opt.inject_omega_error) pair.omega += 0.1;
      const double res = integral_equation_residual(pair, P, 9);
      const double rel = res / pair.lambda;
      worst_rel = std::max(worst_rel, rel);
      if (rel > 1e-8) ok = false;
    }
    results.push_back(
        {"integral-equation-residual", ok, "max_residual_rel=" + fmt6(worst_rel)});
  }

  {  // discrete log-det path vs Mercer series
    const SeriesMi series = finite_time_mi(sp, n0, kDefaultTailTol);
    const SampleGrid grid = uniform_grid(T, 2048);
    const Eigen::MatrixXd K_X =
        covariance_matrix(StationaryKernel::Exponential(P, alpha), grid);
    const Eigen::MatrixXd K_N = awgn_sample_covariance(n0, grid);
    const double discrete = discrete_mutual_information(K_X, K_N);
    const double rel = std::abs(discrete - series.mi) / series.mi;
    results.push_back({"cross-path-mi", rel <= 0.01,
                       "series=" + fmt6(series.mi) + " discrete=" + fmt6(discrete) +
                           " rel=" + fmt6(rel)});
  }

  {  // Shannon closed form vs quadrature
    const double closed = shannon_capacity_exponential(P, alpha, n0);
    const double quad = shannon_capacity_quadrature(
        StationaryKernel::Exponential(P, alpha), AwgnNoise{n0});
    const double rel = std::abs(quad - closed) / closed;
    results.push_back({"shannon-closed-form", rel <= 1e-8,
                       "closed=" + fmt6(closed) + " quadrature=" + fmt6(quad) +
                           " rel=" + fmt6(rel)});
  }

  {  // margin over the Shannon rate must be positive on 0 < P < delta
    const double delta = exceed_delta(n0, alpha, T);
    std::mt19937 rng(12345);
    std::uniform_real_distribution<double> unif(0.0, delta);
    bool ok = true;
    double worst = 1e300;
    for (int i = 0; i < 100; ++i) {
      const double p = unif(rng);
      if (p == 0.0) continue;
      try {
        const CapacityReport rep = exceed_shannon_report(p, alpha, n0, T);
        worst = std::min(worst, rep.margin);
        if (!(rep.margin > 0.0)) ok = false;
      } catch (const std::logic_error&) {
        ok = false;
      }
    }
    results.push_back({"below-delta-margin", ok,
                       "delta=" + fmt6(delta) + " min_margin=" + fmt6(worst)});
  }

  {  // C(T) -> P/n0 as T -> 0+
    const double target = instant_rate(P, n0);
    double prev_dev = 1e300;
    bool ok = true;
    double last_dev = 0.0;
    for (double Ts : {1e-1, 1e-2, 1e-3}) {
      const CapacityReport rep = exceed_shannon_report(P, alpha, n0, Ts);
      last_dev = std::abs(rep.C_T / target - 1.0);
      if (!(last_dev < prev_dev)) ok = false;
      prev_dev = last_dev;
    }
    if (!(last_dev <= 0.05)) ok = false;
    results.push_back({"instant-rate-limit", ok,
                       "P/n0=" + fmt6(target) + " final_rel_dev=" + fmt6(last_dev)});
  }

  return results;
}

std::string check_results_json(const std::vector<CheckResult>& results) {
  nlohmann::ordered_json out;
  out["checks"] = nlohmann::ordered_json::array();
  bool all = true;
  for (const CheckResult& r : results) {
    nlohmann::ordered_json obj;
    obj["name"] = r.name;
    obj["passed"] = r.passed;
    obj["detail"] = r.detail;
    out["checks"].push_back(std::move(obj));
    all = all && r.passed;
  }
  out["all_passed"] = all;
  return out.dump(2) + "\n";
}

void write_check_results_text(const std::vector<CheckResult>& results, std::ostream& out) {
  for (const CheckResult& r : results)
    out << (r.passed ? "PASS" : "FAIL") << "  " << r.name << "  " << r.detail << '\n';
}

}  // namespace ftcap
