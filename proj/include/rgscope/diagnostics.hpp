#ifndef RGSCOPE_DIAGNOSTICS_HPP
#define RGSCOPE_DIAGNOSTICS_HPP

#include <string>
#include <vector>

#include "rgscope/field.hpp"
#include "rgscope/params.hpp"

namespace rgscope {

/// Scaling dimension of the term u^a u_x^b u_xx^c about the heat fixed point.
double d_F(double a, int b, int c);

/// Scaling dimension about the t^p fixed point.
double eta_F(double a, int b, int c, double p);

/// Exponent a on the critical curve for given p: (p + 3) / (p + 1).
double a_critical(double p);

/// Decay exponent of u_t = t^p u_xx - u^a: max{(1 + p) / 2, 1 / (a - 1)}.
double alpha_theory(double p, double a);

enum class Regime { Linear, Critical, Nonlinear };

/// Side of the critical curve a = a_critical(p); equality within 1e-12 is
/// Critical, larger a is Linear, smaller is Nonlinear.
Regime classify_regime(double p, double a);

std::string regime_name(Regime r);

/// Least-squares line through (x_j^2 / 4, -ln phi(x_j)) over the nodes with
/// phi >= cutoff.  A Gaussian e^(-k x^2 / 4) gives slope k exactly.
SlopeFit profile_slope(const Field1D& phi, double cutoff = 0.01);

/// Least-squares line of ln A_n vs ln n over the last tail_fraction of the
/// records; at criticality the slope is -alpha (logarithmic correction).
SlopeFit loglog_prefactor_fit(const std::vector<IterationRecord>& records,
                              double tail_fraction = 0.5);

}  // namespace rgscope

#endif
