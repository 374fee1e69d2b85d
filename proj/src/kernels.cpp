#include "ftcap/kernels.hpp"

#include <cmath>
#include <numbers>

namespace ftcap {

StationaryKernel StationaryKernel::Sinc(double W, double psd_level) {
  if (!(W > 0.0) || !(psd_level > 0.0))
    throw std::invalid_argument("Sinc kernel requires W > 0 and psd_level > 0");
  StationaryKernel k;
  k.family = KernelFamily::Sinc;
  k.bandwidth = W;
  k.psd_level = psd_level;
  k.power = 2.0 * W * psd_level;
  return k;
}

StationaryKernel StationaryKernel::Exponential(double P, double alpha) {
  if (!(P >= 0.0) || !(alpha > 0.0))
    throw std::invalid_argument("Exponential kernel requires P >= 0 and alpha > 0");
  StationaryKernel k;
  k.family = KernelFamily::Exponential;
  k.power = P;
  k.alpha = alpha;
  return k;
}

double sinc(double x) {
  const double pix = std::numbers::pi * x;
  if (std::abs(x) < 1e-8) return 1.0 - pix * pix / 6.0;
  return std::sin(pix) / pix;
}

double autocorrelation(const StationaryKernel& k, double tau) {
  switch (k.family) {
    case KernelFamily::Sinc:
      return k.power * sinc(2.0 * k.bandwidth * tau);
    case KernelFamily::Exponential:
      return k.power * std::exp(-k.alpha * std::abs(tau));
  }
  return 0.0;
}

double psd(const StationaryKernel& k, double f) {
  switch (k.family) {
    case KernelFamily::Sinc:
      return std::abs(f) <= k.bandwidth ? k.psd_level : 0.0;
    case KernelFamily::Exponential: {
      const double w = 2.0 * std::numbers::pi * f;
      return 2.0 * k.power * k.alpha / (k.alpha * k.alpha + w * w);
    }
  }
  return 0.0;
}

KernelValidation validate_kernel(const StationaryKernel& k, int probe_count) {
  if (probe_count < 2) throw std::invalid_argument("probe_count must be >= 2");

  // characteristic scales of decay in time and frequency
  double tau_max, f_max;
  if (k.family == KernelFamily::Sinc) {
    tau_max = 10.0 / (2.0 * k.bandwidth);
    f_max = 2.0 * k.bandwidth;
  } else {
    tau_max = 10.0 / k.alpha;
    f_max = 5.0 * k.alpha / (2.0 * std::numbers::pi);
  }

  KernelValidation v;
  v.symmetric = true;
  v.bounded_by_power = true;
  v.psd_nonnegative = true;
  v.band_limited = k.band_limited();

  const double r0 = autocorrelation(k, 0.0);
  for (int i = 0; i < probe_count; ++i) {
    const double tau = tau_max * (i + 1) / probe_count;
    const double rp = autocorrelation(k, tau);
    const double rm = autocorrelation(k, -tau);
    if (rp != rm) v.symmetric = false;
    if (std::abs(rp) > r0 * (1.0 + 1e-12)) v.bounded_by_power = false;
    const double f = f_max * i / (probe_count - 1);
    if (psd(k, f) < 0.0 || psd(k, -f) < 0.0) v.psd_nonnegative = false;
  }
  return v;
}

}  // namespace ftcap
