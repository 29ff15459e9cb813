#include "rgscope/integrator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "rgscope/errors.hpp"

namespace rgscope {

namespace {

double powi(double x, int n) {
  double r = 1.0;
  for (int i = 0; i < n; ++i) r *= x;
  return r;
}

/// Time part chi (t^p + delta t^r) of the diffusion coefficient.
double time_factor(const EquationParams& q, double t) {
  double g = std::pow(t, q.p);
  if (q.delta != 0.0) g += q.delta * std::pow(t, q.r);
  return q.chi * g;
}

struct NonlinearTerm {
  double lambda = 0.0;
  double a = 0.0;
  int a_int = 0;
  bool a_is_int = false;
  bool clamp = false;  // non-integer a: evaluate u^a on max(u, 0)
  int b = 0;
  int c = 0;
  bool pure_power = false;  // b = c = 0, term depends on u only
  double skip_below = 0.0;  // pure power: |u| below this cannot move u by an ulp
  bool skippable = false;   // derivative terms: tail contribution negligible

  NonlinearTerm(const EquationParams& q, double dt)
      : lambda(q.lambda), a(q.a), b(q.b), c(q.c) {
    a_is_int = (a == std::floor(a)) && std::abs(a) < 64.0;
    a_int = a_is_int ? static_cast<int>(a) : 0;
    clamp = !a_is_int && lambda != 0.0;
    pure_power = (b == 0 && c == 0);
    if (pure_power) {
      if (a == 0.0) {
        skip_below = -1.0;  // constant source, never skip
      } else if (!a_is_int && a > 1.0 && lambda != 0.0 && dt > 0.0) {
        // dt |lambda| u^a < eps_mach * u  =>  the update rounds away
        skip_below = std::pow(std::numeric_limits<double>::epsilon() /
                                  (2.0 * dt * std::abs(lambda)),
                              1.0 / (a - 1.0));
      }
    }
    skippable = (a + b + c >= 1.0) && (a == 0.0 || a >= 1.0 || b + c >= 1);
  }

  double eval(double u, double ux, double uxx, long long* clamps) const {
    double ua;
    if (a == 0.0) {
      ua = 1.0;
    } else if (a_is_int) {
      ua = powi(u, a_int);
    } else {
      double base = u;
      if (base < 0.0) {
        base = 0.0;
        if (clamps) ++*clamps;
      }
      ua = std::pow(base, a);
    }
    return lambda * ua * powi(ux, b) * powi(uxx, c);
  }
};

struct StepStats {
  double abs_sum = 0.0;
  double min_val = 0.0;
  double max_abs = 0.0;
  std::ptrdiff_t first_nz = -1;
  std::ptrdiff_t last_nz = -1;
  long long clamps = 0;
};

/// One explicit step.  cur has size n with zero endpoints; next must have
/// size n + 2 and corresponds to the grid widened by one node on each side
/// (next[k] sits where cur[k-1] does).  sx_store, when non-null, holds the
/// 1 + mu cos(omega x) factor for old node j at sx_store[j + sx_off].
void step_kernel(const double* cur, std::size_t n, double dx, double tf,
                 double eps, const double* sx_store, std::ptrdiff_t sx_off,
                 const NonlinearTerm& nl, double dt, double* next,
                 StepStats& st) {
  const double inv2dx = 1.0 / (2.0 * dx);
  const double invdx2 = 1.0 / (dx * dx);
  const bool has_nl = nl.lambda != 0.0;
  const double tiny = 1e-60;
  next[0] = 0.0;
  next[n + 1] = 0.0;
  for (std::size_t k = 1; k <= n; ++k) {
    const std::size_t j = k - 1;
    const double u0 = cur[j];
    const double um = (j > 0) ? cur[j - 1] : 0.0;
    const double up = (j + 1 < n) ? cur[j + 1] : 0.0;
    const double uxx = (up - 2.0 * u0 + um) * invdx2;
    double kcoef = tf;
    if (eps != 0.0 && uxx < 0.0) kcoef *= 1.0 + eps;
    if (sx_store) kcoef *= sx_store[static_cast<std::ptrdiff_t>(j) + sx_off];
    double g = kcoef * uxx;
    if (has_nl) {
      const double au0 = std::abs(u0);
      bool skip;
      if (nl.pure_power)
        skip = au0 <= nl.skip_below;
      else
        skip = nl.skippable && au0 <= tiny && std::abs(um) <= tiny &&
               std::abs(up) <= tiny;
      if (!skip) {
        const double ux = (up - um) * inv2dx;
        g += nl.eval(u0, ux, uxx, &st.clamps);
      }
    }
    const double v = u0 + dt * g;
    next[k] = v;
    st.abs_sum += std::abs(v);
    st.min_val = std::min(st.min_val, v);
    st.max_abs = std::max(st.max_abs, std::abs(v));
    if (v != 0.0) {
      if (st.first_nz < 0) st.first_nz = static_cast<std::ptrdiff_t>(k);
      st.last_nz = static_cast<std::ptrdiff_t>(k);
    }
  }
}

double spatial_factor(const EquationParams& q, std::ptrdiff_t offset,
                      double dx) {
  return 1.0 + q.mu * std::cos(q.omega * (static_cast<double>(offset) * dx));
}

}  // namespace

double diffusion_coefficient(const EquationParams& params, double x, double t,
                             double uxx) {
  double k = time_factor(params, t);
  if (params.eps != 0.0 && uxx < 0.0) k *= 1.0 + params.eps;  // H(-uxx)
  if (params.mu != 0.0) k *= 1.0 + params.mu * std::cos(params.omega * x);
  if (!(k > 0.0))
    throw NonPositiveCoefficient("diffusion coefficient is not positive");
  return k;
}

StabilityBounds stability_bounds(const EquationParams& params, double dx,
                                 double t_lo, double t_hi) {
  if (!(dx > 0.0)) throw InvalidParams("stability_bounds: dx must be positive");
  if (!(t_hi >= t_lo) || !(t_lo > 0.0))
    throw InvalidParams("stability_bounds: bad time window");

  // extremes of chi (t^p + delta t^r) over the window, by dense sampling
  double tf_lo = std::numeric_limits<double>::infinity();
  double tf_hi = -tf_lo;
  const int samples = 128;
  for (int i = 0; i <= samples; ++i) {
    const double t = t_lo + (t_hi - t_lo) * static_cast<double>(i) / samples;
    const double g = time_factor(params, t);
    tf_lo = std::min(tf_lo, g);
    tf_hi = std::max(tf_hi, g);
  }

  const double amu = std::abs(params.mu);
  StabilityBounds out;
  out.K_lo = tf_lo * (1.0 - amu);  // H = 0 branch
  out.K_hi = tf_hi * (1.0 + amu) * (1.0 + std::max(params.eps, 0.0));
  if (!(out.K_lo > 0.0))
    throw NonPositiveCoefficient(
        "stability_bounds: diffusion coefficient not bounded away from zero");

  const double al = std::abs(params.lambda);
  if (al == 0.0) {
    out.dx_max = std::numeric_limits<double>::infinity();
    out.dt_max = dx * dx / (2.0 * out.K_hi);
  } else {
    if (params.b > 0) {
      const double margin = out.K_lo - params.c * al;
      if (!(margin > 0.0))
        throw UnstableConfiguration(
            "stability_bounds: K_lo - c|lambda| must be positive when b > 0");
      out.dx_max = 2.0 * margin / (params.b * al);
    } else {
      out.dx_max = std::numeric_limits<double>::infinity();
    }
    out.dt_max =
        dx * dx / (dx * dx * params.a * al + 2.0 * out.K_hi + 2.0 * params.c * al);
  }
  if (!(out.dt_max > 0.0))
    throw UnstableConfiguration("stability_bounds: dt_max is not positive");
  return out;
}

Field1D euler_step(const Field1D& u, const EquationParams& params, double dt) {
  const NonlinearTerm nl(params, dt);
  const double tf = time_factor(params, u.t());
  const std::size_t n = u.size();
  std::vector<double> sx;
  if (params.mu != 0.0) {
    sx.resize(n);
    for (std::size_t j = 0; j < n; ++j)
      sx[j] = spatial_factor(params,
                             static_cast<std::ptrdiff_t>(j) - u.center(),
                             u.dx());
  }
  std::vector<double> next(n + 2);
  StepStats st;
  step_kernel(u.values().data(), n, u.dx(), tf, params.eps,
              sx.empty() ? nullptr : sx.data(), 0, nl, dt, next.data(), st);
  if (!std::isfinite(st.abs_sum))
    throw NumericOverflow("euler_step: non-finite sample produced");
  if (nl.clamp) {
    const double floor_in = -1e-9 * linf_norm(u);
    double min_in = 0.0;
    for (double v : u.values()) min_in = std::min(min_in, v);
    if (min_in < floor_in && st.min_val < -1e-9 * st.max_abs)
      throw SignViolation(
          "euler_step: negative samples persisted through a full step with "
          "non-integer exponent a");
  }
  return Field1D(u.dx(), u.center() + 1, std::move(next), u.t() + dt);
}

Field1D evolve(const Field1D& u, const EquationParams& params, double t_end,
               double dt_safety, int* sign_clamp_warnings) {
  params.validate();
  if (!(t_end > u.t())) throw InvalidParams("evolve: t_end must exceed u.t");
  const StabilityBounds sb = stability_bounds(params, u.dx(), u.t(), t_end);
  if (u.dx() > sb.dx_max)
    throw UnstableConfiguration("evolve: dx exceeds the stable mesh bound");
  const double span = t_end - u.t();
  const double dt_cap = dt_safety * sb.dt_max;
  const auto n_steps = static_cast<long long>(std::ceil(span / dt_cap));
  const double h = span / static_cast<double>(n_steps);

  const NonlinearTerm nl(params, h);
  std::vector<double> cur(u.values());
  std::vector<double> next;
  std::ptrdiff_t center = u.center();
  const double dx = u.dx();
  const double t0 = u.t();
  long long clamps = 0;
  bool prev_violation = false;

  // 1 + mu cos(omega x) tabulated once over every node the support can reach
  std::vector<double> sx_store;
  std::ptrdiff_t q_min = 0;
  if (params.mu != 0.0) {
    q_min = -center - n_steps - 1;
    const std::ptrdiff_t q_max =
        static_cast<std::ptrdiff_t>(cur.size()) - 1 - center + n_steps + 1;
    sx_store.resize(static_cast<std::size_t>(q_max - q_min + 1));
    for (std::ptrdiff_t q = q_min; q <= q_max; ++q)
      sx_store[static_cast<std::size_t>(q - q_min)] =
          spatial_factor(params, q, dx);
  }

  for (long long s = 0; s < n_steps; ++s) {
    const double t = t0 + h * static_cast<double>(s);
    const double tf = time_factor(params, t);
    const std::size_t n = cur.size();
    next.resize(n + 2);
    StepStats st;
    step_kernel(cur.data(), n, dx, tf, params.eps,
                sx_store.empty() ? nullptr : sx_store.data(),
                sx_store.empty() ? 0 : -center - q_min, nl, h, next.data(),
                st);
    if (!std::isfinite(st.abs_sum))
      throw NumericOverflow("evolve: non-finite sample produced");
    clamps += st.clamps;
    if (nl.clamp) {
      const bool violation = st.min_val < -1e-9 * st.max_abs;
      if (violation && prev_violation)
        throw SignViolation(
            "evolve: negative samples persisted through a full step with "
            "non-integer exponent a");
      prev_violation = violation;
    }
    center += 1;
    // trim exact-zero tails, keeping one zero sentinel per side; values are
    // untouched so the result matches the plain euler_step chain
    const auto total = static_cast<std::ptrdiff_t>(n) + 2;
    std::ptrdiff_t lo, hi;
    if (st.first_nz >= 0) {
      lo = std::max<std::ptrdiff_t>(std::min(st.first_nz - 1, center - 1), 0);
      hi = std::min<std::ptrdiff_t>(std::max(st.last_nz + 1, center + 1),
                                    total - 1);
    } else {
      lo = std::max<std::ptrdiff_t>(center - 1, 0);
      hi = std::min<std::ptrdiff_t>(center + 1, total - 1);
    }
    if ((lo > 0 || hi < total - 1) && hi - lo + 1 >= 3 &&
        next[static_cast<std::size_t>(lo)] == 0.0 &&
        next[static_cast<std::size_t>(hi)] == 0.0) {
      std::copy(next.begin() + lo, next.begin() + hi + 1, next.begin());
      next.resize(static_cast<std::size_t>(hi - lo + 1));
      center -= lo;
    }
    cur.swap(next);
  }
  if (sign_clamp_warnings)
    *sign_clamp_warnings += static_cast<int>(
        std::min<long long>(clamps, std::numeric_limits<int>::max()));
  return Field1D(dx, center, std::move(cur), t_end);
}

}  // namespace rgscope
