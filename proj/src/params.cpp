#include "rgscope/params.hpp"

#include <cmath>

#include "rgscope/errors.hpp"

namespace rgscope {

void EquationParams::validate() const {
  if (!(chi > 0.0)) throw InvalidParams("chi must be positive");
  if (!(p >= 0.0)) throw InvalidParams("p must be nonnegative");
  if (delta != 0.0 && !(r < p))
    throw InvalidParams("r < p is required when delta != 0");
  if (!(eps >= 0.0)) throw InvalidParams("eps must be nonnegative");
  if (!(std::abs(mu) < 1.0))
    throw InvalidParams("|mu| < 1 is required so that 1 + mu*cos(omega x) > 0");
  if (!(omega > 0.0)) throw InvalidParams("omega must be positive");
  if (m != 1) throw InvalidParams("m is fixed to 1");
  if (b < 0 || c < 0) throw InvalidParams("b and c must be nonnegative");
  if (lambda != 0.0 && !(a > 0.0) && a != 0.0)
    throw InvalidParams("a must be nonnegative");
}

void RGPolicy::validate(const EquationParams& params) const {
  if (!(L > 1.0)) throw InvalidParams("scale factor L must exceed 1");
  if (!(dt_safety > 0.0 && dt_safety <= 1.0))
    throw InvalidParams("dt_safety must lie in (0, 1]");
  if (!(tol > 0.0)) throw InvalidParams("tol must be positive");
  if (max_iter < 1) throw InvalidParams("max_iter must be at least 1");
  if (beta_mode == BetaMode::Marginal && params.b + 2 * params.c == 0)
    throw InvalidParams("marginal beta mode requires b + 2c > 0");
}

}  // namespace rgscope
