#ifndef RGSCOPE_ORACLES_HPP
#define RGSCOPE_ORACLES_HPP

#include <functional>

#include "rgscope/field.hpp"

namespace rgscope {

/// Heat-kernel convolution of f, advanced by t - f.t(); evaluated on the
/// grid described by (dx, center, n_nodes) and stamped with time t.
Field1D heat_solution(const Field1D& f, double t, double dx,
                      std::ptrdiff_t center, std::size_t n_nodes);

/// Same grid as f.
Field1D heat_solution(const Field1D& f, double t);

enum class ProfileKind { Star, P, Sigma };

/// Normalized Gaussian profiles with value 1 at the origin:
/// Star = e^(-x^2/4), P(p) = e^(-(p+1)x^2/4), Sigma(s) = e^(-x^2/(4s)).
double gaussian_profile(ProfileKind kind, double param, double x);

/// Solution of u_t = K(t) u_xx from data f, via the time change
/// tau(t) = integral of K from f.t() to t, which reduces to the heat flow.
Field1D timedep_linear_solution(const Field1D& f,
                                const std::function<double(double)>& K,
                                double t);

/// First-order anomalous exponent 1/2 + eps / sqrt(2 pi e).
double barenblatt_alpha_first_order(double eps);

}  // namespace rgscope

#endif
