// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Runs at desk scale (well under a minute per criterion).

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ftcap/figures.hpp"
#include "ftcap/quadrature.hpp"

using namespace ftcap;

namespace {

struct Criterion {
  std::string name;
  std::function<bool(std::string&)> fn;
};

std::string fmt(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

// 1. Eigenvalue partial sum reaches P T = 2 within 1e-6 at K <= 100,000.
bool trace_identity(std::string& detail) {
  const auto t0 = std::chrono::steady_clock::now();
  SpectrumBudget b;
  b.max_pairs = 100000;
  b.trace_tol = 1e-6;
  const auto sp = exponential_spectrum(1.0, 1.0, 2.0, b);
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  detail = "trace=" + fmt(sp.trace_partial) + " deficit=" + fmt(sp.trace_deficit()) +
           " K=" + std::to_string(sp.pairs.size()) + " time=" + fmt(secs) + "s";
  return sp.trace_partial >= 2.0 - 1e-6 && secs < 1.0;
}

// 2. Sum of squared eigenvalues vs the closed form over {0.5,1,2}^3.
bool trace_square_identity(std::string& detail) {
  double worst = 0.0;
  for (double P : {0.5, 1.0, 2.0})
    for (double alpha : {0.5, 1.0, 2.0})
      for (double T : {0.5, 1.0, 2.0}) {
        SpectrumBudget b;
        b.max_pairs = 20000;
        const auto sp = exponential_spectrum(P, alpha, T, b);
        double s2 = 0.0;
        for (auto it = sp.pairs.rbegin(); it != sp.pairs.rend(); ++it)
          s2 += it->lambda * it->lambda;
        const double closed = trace_square_closed(P, alpha, T);
        worst = std::max(worst, std::abs(s2 - closed) / closed);
      }
  const double spot = trace_square_closed(1.0, 1.0, 2.0);
  detail = "worst_rel=" + fmt(worst) + " value(1,1,2)=" + fmt(spot);
  return worst <= 1e-6 && std::abs(spot - 1.5091578) < 1e-6;
}

// 3. Nystrom eigenvalues converge to the analytic ones.
bool nystrom_equivalence(std::string& detail) {
  const auto t0 = std::chrono::steady_clock::now();
  SpectrumBudget b;
  b.max_pairs = 10;
  const auto sp = exponential_spectrum(1.0, 1.0, 2.0, b);
  const auto expo = StationaryKernel::Exponential(1.0, 1.0);

  auto worst_rel = [&](int n) {
    const auto approx = nystrom_spectrum(expo, 2.0, n, 10);
    double worst = 0.0;
    for (int i = 0; i < 10; ++i)
      worst = std::max(worst,
                       std::abs(approx[i] - sp.pairs[i].lambda) / sp.pairs[i].lambda);
    return worst;
  };
  const double e512 = worst_rel(512);
  const double e2048 = worst_rel(2048);
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  detail = "rel_err(512)=" + fmt(e512) + " rel_err(2048)=" + fmt(e2048) +
           " time=" + fmt(secs) + "s";
  return e2048 <= 1e-2 && e2048 < e512 && secs < 30.0;
}

// 4. Discrete log-det path at n=4096 vs the Mercer series, within 1%.
bool cross_path_mi(std::string& detail) {
  const auto t0 = std::chrono::steady_clock::now();
  SpectrumBudget b;
  b.max_pairs = 100000;
  const auto sp = exponential_spectrum(1.0, 1.0, 2.0, b);
  const double series = finite_time_mi(sp, 1.0, kDefaultTailTol).mi;

  const SampleGrid grid = uniform_grid(2.0, 4096);
  const Eigen::MatrixXd K_X =
      covariance_matrix(StationaryKernel::Exponential(1.0, 1.0), grid);
  const Eigen::MatrixXd K_N = awgn_sample_covariance(1.0, grid);
  const double discrete = discrete_mutual_information(K_X, K_N);
  const double rel = std::abs(discrete - series) / series;
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  detail = "series=" + fmt(series) + " discrete=" + fmt(discrete) +
           " rel=" + fmt(rel) + " time=" + fmt(secs) + "s";
  return rel <= 0.01 && secs < 60.0;
}

// 5. Shannon quadrature vs closed form; spot value at (1,1,1).
bool shannon_closed_form(std::string& detail) {
  const double spot = shannon_capacity_exponential(1.0, 1.0, 1.0);
  double worst = 0.0;
  for (double P : {0.5, 1.0, 2.0})
    for (double alpha : {0.5, 1.0, 2.0})
      for (double n0 : {0.5, 1.0, 2.0}) {
        const double closed = shannon_capacity_exponential(P, alpha, n0);
        const double quad = shannon_capacity_quadrature(
            StationaryKernel::Exponential(P, alpha), AwgnNoise{n0});
        worst = std::max(worst, std::abs(quad - closed) / closed);
      }
  detail = "worst_rel=" + fmt(worst) + " spot=" + fmt(spot);
  return worst <= 1e-8 && std::abs(spot - 0.5 * (std::sqrt(5.0) - 1.0)) < 1e-12;
}

// 6. Below-delta regime: 100 random P in (0, delta) all beat Shannon.
bool below_delta_regime(std::string& detail) {
  const double delta = exceed_delta(1.0, 1.0, 2.0);
  if (std::abs(delta - 0.43103) > 1e-4) {
    detail = "delta=" + fmt(delta) + " outside expectation";
    return false;
  }
  std::mt19937 rng(987654);
  std::uniform_real_distribution<double> unif(0.0, delta);
  double min_margin = 1e300;
  for (int i = 0; i < 100; ++i) {
    double p = unif(rng);
    if (p == 0.0) p = delta / 2;
    const auto rep = exceed_shannon_report(p, 1.0, 1.0, 2.0);
    min_margin = std::min(min_margin, rep.margin);
    if (!(rep.margin > 0.0)) {
      detail = "P=" + fmt(p) + " margin=" + fmt(rep.margin);
      return false;
    }
  }
  detail = "delta=" + fmt(delta) + " min_margin=" + fmt(min_margin);
  return true;
}

// 7. fig3 parameter grid: 12 cells of I(T) > T C_sh.
bool fig3_regime(std::string& detail) {
  double min_gap = 1e300;
  for (double P : {1.0, 2.0, 4.0})
    for (double T : {1.0, 2.0, 4.0, 8.0}) {
      const auto rep = exceed_shannon_report(P, 1.0, 1.0, T);
      const double gap = rep.I_T - T * rep.C_sh;
      min_gap = std::min(min_gap, gap);
      if (!(gap > 0.0)) {
        detail = "P=" + fmt(P) + " T=" + fmt(T) + " gap=" + fmt(gap);
        return false;
      }
    }
  detail = "min_gap=" + fmt(min_gap) + " over 12 cells";
  return true;
}

// 8. Instant rate: C(T) -> P/n0 = 1 with strictly decreasing deviation.
bool instant_rate_limit(std::string& detail) {
  double prev = 1e300;
  double last = 0.0;
  for (double T : {1e-1, 1e-2, 1e-3}) {
    const auto rep = exceed_shannon_report(1.0, 1.0, 1.0, T);
    last = std::abs(rep.C_T - 1.0);
    if (!(last < prev)) {
      detail = "deviation not decreasing at T=" + fmt(T);
      return false;
    }
    prev = last;
  }
  detail = "|C(1e-3) - 1|=" + fmt(last);
  return last <= 0.05;
}

// 9. fig1 setting: rates nondecreasing in n and exceeding the Shannon line.
bool fig1_reproduction(std::string& detail) {
  const auto signal = StationaryKernel::Sinc(5.0, 0.1);
  const auto noise = StationaryKernel::Exponential(1.0, 1.0);
  const double c_sh = shannon_capacity_quadrature(signal, noise);

  std::vector<int> n_list;
  for (int n = 2; n <= 1024; n *= 2) n_list.push_back(n);
  const auto pts = mi_vs_n(signal, NoiseModel{noise}, 1.0, n_list);
  for (std::size_t i = 1; i < pts.size(); ++i)
    if (!(pts[i].mi >= pts[i - 1].mi - 1e-10)) {
      detail = "rate not monotone at n=" + std::to_string(pts[i].n);
      return false;
    }
  const double final_rate = pts.back().rate;
  // visual convergence: the last doubling moves the rate by well under 1%
  const double last_step = std::abs(pts.back().rate - pts[pts.size() - 2].rate) /
                           pts.back().rate;
  detail = "C(n=1024)=" + fmt(final_rate) + " C_sh=" + fmt(c_sh) +
           " last_doubling_rel_step=" + fmt(last_step);
  return final_rate > c_sh && last_step < 0.01;
}

// 10. Orthonormality of phi_1..phi_10 under quadrature.
bool orthonormality(std::string& detail) {
  SpectrumBudget b;
  b.max_pairs = 10;
  const auto sp = exponential_spectrum(1.0, 1.0, 2.0, b);
  double worst = 0.0;
  for (int i = 0; i < 10; ++i)
    for (int j = i; j < 10; ++j) {
      const double g = integrate_adaptive(
          [&](double t) {
            return eigenfunction_eval(sp.pairs[i], t) * eigenfunction_eval(sp.pairs[j], t);
          },
          0.0, 2.0, 1e-11, 48,
          oscillation_depth(sp.pairs[i].omega + sp.pairs[j].omega, 2.0));
      worst = std::max(worst, std::abs(g - (i == j ? 1.0 : 0.0)));
    }
  detail = "max_gram_deviation=" + fmt(worst);
  return worst <= 1e-7;
}

// 11. Characteristic integral equation residual for k <= 10.
bool integral_residual(std::string& detail) {
  SpectrumBudget b;
  b.max_pairs = 10;
  const auto sp = exponential_spectrum(1.0, 1.0, 2.0, b);
  double worst = 0.0;
  for (const auto& pair : sp.pairs) {
    const double res = integral_equation_residual(pair, 1.0, 9);
    worst = std::max(worst, res / pair.lambda);
  }
  detail = "max_residual_rel=" + fmt(worst);
  return worst <= 1e-8;
}

// 12. Two consecutive check runs produce byte-identical JSON.
bool check_determinism(std::string& detail) {
  auto run_to = [](const std::string& path) {
    const std::string cmd =
        std::string(FTCAP_CLI_PATH) + " check --json --out " + path;
    return std::system(cmd.c_str());
  };
  const std::string p1 = "/tmp/ftcap_acc_check1.json";
  const std::string p2 = "/tmp/ftcap_acc_check2.json";
  if (run_to(p1) != 0 || run_to(p2) != 0) {
    detail = "check command failed";
    return false;
  }
  auto slurp = [](const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  };
  const std::string a = slurp(p1);
  const std::string b = slurp(p2);
  detail = "bytes=" + std::to_string(a.size());
  return !a.empty() && a == b;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"1 trace identity (K <= 100000, < 1 s)", trace_identity},
      {"2 trace-square identity", trace_square_identity},
      {"3 Nystrom oracle equivalence", nystrom_equivalence},
      {"4 cross-path MI agreement (n = 4096)", cross_path_mi},
      {"5 Shannon closed form vs quadrature", shannon_closed_form},
      {"6 Exceed-Shannon for 0 < P < delta", below_delta_regime},
      {"7 Exceed-Shannon across the fig3 parameter grid", fig3_regime},
      {"8 instant rate limit C(0+) = P/n0", instant_rate_limit},
      {"9 fig1 setting reproduction", fig1_reproduction},
      {"10 eigenfunction orthonormality", orthonormality},
      {"11 integral-equation residual", integral_residual},
      {"12 check output determinism", check_determinism},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    std::string detail;
    bool ok = false;
    try {
      ok = c.fn(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    std::printf("[%s] criterion %s — %s\n", ok ? "PASS" : "FAIL", c.name.c_str(),
                detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
  }
  if (failures) std::printf("%d criterion(s) failed\n", failures);
  return failures == 0 ? 0 : 1;
}
