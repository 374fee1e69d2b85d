#ifndef FTCAP_KERNELS_HPP
#define FTCAP_KERNELS_HPP

#include <stdexcept>

namespace ftcap {

enum class KernelFamily { Sinc, Exponential };

/// Stationary autocorrelation model R(tau) with its paired PSD S(f).
/// Two families:
///   Sinc:        R(tau) = psd_level * 2W * sinc(2W tau),  S(f) = psd_level * 1{|f| <= W}
///   Exponential: R(tau) = P * exp(-alpha |tau|),          S(f) = 2 P alpha / (alpha^2 + (2 pi f)^2)
struct StationaryKernel {
  KernelFamily family;
  double bandwidth = 0.0;  // Sinc only: W [Hz]
  double psd_level = 0.0;  // Sinc only: in-band PSD level
  double power = 0.0;      // R(0)
  double alpha = 0.0;      // Exponential only: decay rate [1/s]

  static StationaryKernel Sinc(double W, double psd_level);
  static StationaryKernel Exponential(double P, double alpha);

  bool band_limited() const { return family == KernelFamily::Sinc; }
};

/// sin(pi x)/(pi x), series branch near 0 so the removable singularity stays smooth.
double sinc(double x);

double autocorrelation(const StationaryKernel& k, double tau);
double psd(const StationaryKernel& k, double f);

struct KernelValidation {
  bool symmetric = false;         // R(tau) == R(-tau) on the probe grid
  bool bounded_by_power = false;  // |R(tau)| <= R(0)
  bool psd_nonnegative = false;   // S(f) >= 0
  bool band_limited = false;
  bool ok() const { return symmetric && bounded_by_power && psd_nonnegative; }
};

/// Probes symmetry, boundedness and PSD sign on probe_count points spanning the
/// kernel's characteristic scale. Reports, never throws (probe_count >= 2 required).
KernelValidation validate_kernel(const StationaryKernel& k, int probe_count);

}  // namespace ftcap

#endif
