// ftcap — finite-time Gaussian-process capacity toolkit, CLI driver.
//
// Exit codes: 0 success, 1 invalid arguments, 2 numerical failure,
// 3 check-suite failure.

#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ftcap/figures.hpp"

namespace {

struct OutputOptions {
  std::string format = "csv";  // csv | json
  std::string unit = "nats";   // nats | bits
  std::string out_path;
};

void add_output_flags(CLI::App* cmd, OutputOptions& o) {
  cmd->add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--unit", o.unit, "Information unit for rate/MI columns")
      ->check(CLI::IsMember({"nats", "bits"}));
  cmd->add_option("--out", o.out_path, "Write output to PATH instead of stdout");
}

int emit(ftcap::Table table, const OutputOptions& o) {
  if (o.unit == "bits") table.convert_to_bits();
  std::ofstream file;
  std::ostream* out = &std::cout;
  if (!o.out_path.empty()) {
    file.open(o.out_path, std::ios::binary);
    if (!file) {
      std::cerr << "error: cannot open output file: " << o.out_path << "\n";
      return 1;
    }
    out = &file;
  }
  if (o.format == "json")
    *out << ftcap::to_json_string(table);
  else
    ftcap::write_csv(table, *out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-time Gaussian-process capacity toolkit"};
  app.require_subcommand(1);

  // fig1
  auto* fig1 = app.add_subcommand(
      "fig1", "Discrete-path rate vs sample count for the sinc-signal / "
              "exponential-noise setting");
  std::vector<double> fig1_T = {1.0, 2.0, 8.0};
  int fig1_nmax = 1024;
  double fig1_W = 5.0, fig1_S0 = 0.1, fig1_NP = 1.0, fig1_Nalpha = 1.0;
  OutputOptions fig1_out;
  fig1->add_option("--T-list", fig1_T, "Observation window lengths");
  fig1->add_option("--n-max", fig1_nmax, "Largest (doubling) sample count");
  fig1->add_option("--W", fig1_W, "Signal band edge [Hz]");
  fig1->add_option("--S0", fig1_S0, "Signal in-band PSD level");
  fig1->add_option("--noise-P", fig1_NP, "Noise power");
  fig1->add_option("--noise-alpha", fig1_Nalpha, "Noise decay rate [1/s]");
  add_output_flags(fig1, fig1_out);

  // fig3
  auto* fig3 = app.add_subcommand(
      "fig3", "I(T) vs T*C_sh for the exponential-signal / AWGN setting");
  std::vector<double> fig3_P = {1.0, 2.0, 4.0};
  double fig3_alpha = 1.0, fig3_n0 = 1.0, fig3_Tmax = 8.0;
  int fig3_steps = 32;
  OutputOptions fig3_out;
  fig3->add_option("--P-list", fig3_P, "Signal powers");
  fig3->add_option("--alpha", fig3_alpha, "Signal decay rate [1/s]");
  fig3->add_option("--n0", fig3_n0, "Noise level (density n0/2)");
  fig3->add_option("--T-max", fig3_Tmax, "Largest window length");
  fig3->add_option("--T-steps", fig3_steps, "Number of T samples in (0, T-max]");
  add_output_flags(fig3, fig3_out);

  // fig45
  auto* fig45 = app.add_subcommand(
      "fig45", "C(T) vs C_sh sweeps from near-zero T, per (P, alpha)");
  std::vector<double> f45_P = {1.0, 2.0, 4.0};
  std::vector<double> f45_alpha = {1.0, 2.0};
  double f45_n0 = 1.0, f45_Tmin = 1e-3, f45_Tmax = 8.0;
  int f45_steps = 40;
  OutputOptions f45_out;
  fig45->add_option("--P-list", f45_P, "Signal powers");
  fig45->add_option("--alpha-list", f45_alpha, "Signal decay rates");
  fig45->add_option("--n0", f45_n0, "Noise level (density n0/2)");
  fig45->add_option("--T-min", f45_Tmin, "Smallest window length");
  fig45->add_option("--T-max", f45_Tmax, "Largest window length");
  fig45->add_option("--T-steps", f45_steps, "Number of (geometric) T samples");
  add_output_flags(fig45, f45_out);

  // spectrum
  auto* spectrum = app.add_subcommand(
      "spectrum", "Eigenpairs of the exponential-kernel operator on [0, T]");
  double sp_P = 1.0, sp_alpha = 1.0, sp_T = 2.0;
  int sp_K = 50;
  OutputOptions sp_out;
  spectrum->add_option("--P", sp_P, "Signal power");
  spectrum->add_option("--alpha", sp_alpha, "Decay rate [1/s]");
  spectrum->add_option("--T", sp_T, "Window length [s]");
  spectrum->add_option("--K", sp_K, "Number of eigenpairs");
  add_output_flags(spectrum, sp_out);

  // capacity
  auto* capacity = app.add_subcommand(
      "capacity", "Finite-time capacity report for the exponential/AWGN setting");
  double cap_P = 1.0, cap_alpha = 1.0, cap_n0 = 1.0, cap_T = 2.0;
  double cap_tail = ftcap::kDefaultTailTol;
  OutputOptions cap_out;
  capacity->add_option("--P", cap_P, "Signal power");
  capacity->add_option("--alpha", cap_alpha, "Decay rate [1/s]");
  capacity->add_option("--n0", cap_n0, "Noise level (density n0/2)");
  capacity->add_option("--T", cap_T, "Window length [s]");
  capacity->add_option("--tail-tol", cap_tail, "Series truncation gate [nats]");
  add_output_flags(capacity, cap_out);

  // shannon
  auto* shannon = app.add_subcommand("shannon", "Colored-noise Shannon capacity");
  double sh_P = 1.0, sh_alpha = 1.0, sh_n0 = 1.0;
  bool sh_fig1 = false;
  OutputOptions sh_out;
  shannon->add_option("--P", sh_P, "Signal power");
  shannon->add_option("--alpha", sh_alpha, "Decay rate [1/s]");
  shannon->add_option("--n0", sh_n0, "Noise level (density n0/2)");
  shannon->add_flag("--fig1-setting", sh_fig1,
                    "Use the sinc-signal / exponential-noise pair instead");
  add_output_flags(shannon, sh_out);

  // mi
  auto* mi = app.add_subcommand("mi", "Discrete log-determinant mutual information");
  double mi_T = 1.0;
  std::vector<int> mi_n = {16, 32, 64, 128, 256, 512, 1024};
  std::string mi_signal = "sinc", mi_noise = "exp";
  double mi_W = 5.0, mi_S0 = 0.1, mi_P = 1.0, mi_alpha = 1.0;
  double mi_NP = 1.0, mi_Nalpha = 1.0, mi_n0 = 1.0;
  OutputOptions mi_out;
  mi->add_option("--T", mi_T, "Window length [s]");
  mi->add_option("--n-list", mi_n, "Sample counts (ascending)");
  mi->add_option("--signal", mi_signal, "Signal kernel family")
      ->check(CLI::IsMember({"sinc", "exp"}));
  mi->add_option("--W", mi_W, "Sinc signal band edge [Hz]");
  mi->add_option("--S0", mi_S0, "Sinc signal PSD level");
  mi->add_option("--P", mi_P, "Exponential signal power");
  mi->add_option("--alpha", mi_alpha, "Exponential signal decay rate");
  mi->add_option("--noise", mi_noise, "Noise model")
      ->check(CLI::IsMember({"exp", "awgn"}));
  mi->add_option("--noise-P", mi_NP, "Exponential noise power");
  mi->add_option("--noise-alpha", mi_Nalpha, "Exponential noise decay rate");
  mi->add_option("--n0", mi_n0, "AWGN level (density n0/2)");
  add_output_flags(mi, mi_out);

  // check
  auto* check = app.add_subcommand("check", "Run the full invariant suite");
  ftcap::CheckOptions chk;
  bool chk_json = false;
  std::string chk_out_path;
  check->add_option("--P", chk.P, "Signal power");
  check->add_option("--alpha", chk.alpha, "Decay rate [1/s]");
  check->add_option("--n0", chk.n0, "Noise level (density n0/2)");
  check->add_option("--T", chk.T, "Window length [s]");
  check->add_flag("--inject-omega-error", chk.inject_omega_error,
                  "Perturb eigenfrequencies to force a residual failure");
  check->add_flag("--json", chk_json, "Machine-readable per-check results");
  check->add_option("--out", chk_out_path, "Write output to PATH instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (fig1->parsed()) {
      return emit(ftcap::fig1_table(ftcap::StationaryKernel::Sinc(fig1_W, fig1_S0),
                                    ftcap::StationaryKernel::Exponential(fig1_NP,
                                                                         fig1_Nalpha),
                                    fig1_T, fig1_nmax),
                  fig1_out);
    }
    if (fig3->parsed())
      return emit(ftcap::fig3_table(fig3_P, fig3_alpha, fig3_n0, fig3_Tmax, fig3_steps),
                  fig3_out);
    if (fig45->parsed())
      return emit(ftcap::fig45_table(f45_P, f45_alpha, f45_n0, f45_Tmin, f45_Tmax,
                                     f45_steps),
                  f45_out);
    if (spectrum->parsed())
      return emit(ftcap::spectrum_table(sp_P, sp_alpha, sp_T, sp_K), sp_out);
    if (capacity->parsed())
      return emit(ftcap::capacity_table(cap_P, cap_alpha, cap_n0, cap_T, cap_tail),
                  cap_out);
    if (shannon->parsed()) {
      if (sh_fig1)
        return emit(ftcap::shannon_table(ftcap::StationaryKernel::Sinc(5.0, 0.1),
                                         ftcap::StationaryKernel::Exponential(1.0, 1.0)),
                    sh_out);
      return emit(ftcap::shannon_table(sh_P, sh_alpha, sh_n0), sh_out);
    }
    if (mi->parsed()) {
      const ftcap::StationaryKernel signal =
          mi_signal == "sinc" ? ftcap::StationaryKernel::Sinc(mi_W, mi_S0)
                              : ftcap::StationaryKernel::Exponential(mi_P, mi_alpha);
      const ftcap::NoiseModel noise =
          mi_noise == "awgn"
              ? ftcap::NoiseModel{ftcap::AwgnNoise{mi_n0}}
              : ftcap::NoiseModel{ftcap::StationaryKernel::Exponential(mi_NP, mi_Nalpha)};
      return emit(ftcap::mi_table(signal, noise, mi_T, mi_n), mi_out);
    }
    if (check->parsed()) {
      const auto results = ftcap::run_check_suite(chk);
      std::ofstream file;
      std::ostream* out = &std::cout;
      if (!chk_out_path.empty()) {
        file.open(chk_out_path, std::ios::binary);
        if (!file) {
          std::cerr << "error: cannot open output file: " << chk_out_path << "\n";
          return 1;
        }
        out = &file;
      }
      if (chk_json)
        *out << ftcap::check_results_json(results);
      else
        ftcap::write_check_results_text(results, *out);
      for (const auto& r : results)
        if (!r.passed) return 3;
      return 0;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 1;
}
