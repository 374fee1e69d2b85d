#ifndef FTCAP_QUADRATURE_HPP
#define FTCAP_QUADRATURE_HPP

#include <functional>

namespace ftcap {

/// Adaptive Simpson on [a, b] to absolute tolerance abs_tol. min_depth levels
/// are always subdivided before the error estimate may stop the recursion;
/// raise it for oscillatory integrands so periodicity cannot alias the
/// initial samples.
double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double abs_tol, int max_depth = 48, int min_depth = 4);

/// min_depth making the forced grid finer than half a period of cos(omega t)
/// over a span of length len.
int oscillation_depth(double omega, double len);

/// Integral over [0, +inf) via the rational map f = t/(1-t), t in [0, 1].
/// The integrand must decay faster than 1/f^2 for the mapped integrand to
/// stay bounded at t = 1.
double integrate_zero_to_inf(const std::function<double(double)>& f, double abs_tol);

}  // namespace ftcap

#endif
