#include "ftcap/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace ftcap {
namespace {

double simpson(double fa, double fm, double fb, double h) {
  return h / 6.0 * (fa + 4.0 * fm + fb);
}

double adapt(const std::function<double(double)>& f, double a, double b, double fa,
             double fm, double fb, double whole, double tol, int depth, int forced) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = simpson(fa, flm, fm, m - a);
  const double right = simpson(fm, frm, fb, b - m);
  const double err = left + right - whole;
  if (depth <= 0 || (forced <= 0 && std::abs(err) <= 15.0 * tol))
    return left + right + err / 15.0;
  return adapt(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1, forced - 1) +
         adapt(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1, forced - 1);
}

}  // namespace

double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double abs_tol, int max_depth, int min_depth) {
  if (a == b) return 0.0;
  const double fa = f(a);
  const double fb = f(b);
  const double fm = f(0.5 * (a + b));
  const double whole = simpson(fa, fm, fb, b - a);
  return adapt(f, a, b, fa, fm, fb, whole, abs_tol, max_depth, min_depth);
}

int oscillation_depth(double omega, double len) {
  const double cycles = std::abs(omega) * std::abs(len) / std::numbers::pi;
  int depth = 4;
  while ((1 << depth) < 4.0 * (cycles + 1.0) && depth < 24) ++depth;
  return depth;
}

double integrate_zero_to_inf(const std::function<double(double)>& f, double abs_tol) {
  // t = 1 maps to f = inf; clamp so the endpoint sample stays finite.
  auto mapped = [&f](double t) {
    if (t > 1.0 - 1e-12) t = 1.0 - 1e-12;
    const double om = 1.0 - t;
    const double x = t / om;
    return f(x) / (om * om);
  };
  return integrate_adaptive(mapped, 0.0, 1.0, abs_tol);
}

}  // namespace ftcap
