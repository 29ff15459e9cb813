#include "rgscope/field.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>

#include "rgscope/errors.hpp"

namespace rgscope {

Field1D::Field1D(double dx, std::ptrdiff_t center, std::vector<double> values,
                 double t)
    : dx_(dx), center_(center), values_(std::move(values)), t_(t) {
  if (!(dx_ > 0.0)) throw InvalidField("Field1D: dx must be positive");
  if (values_.size() < 3) throw InvalidField("Field1D: need at least 3 samples");
  if (center_ < 0 || center_ >= static_cast<std::ptrdiff_t>(values_.size()))
    throw InvalidField("Field1D: center index out of range");
  for (double v : values_)
    if (!std::isfinite(v)) throw InvalidField("Field1D: non-finite sample");
  if (values_.front() != 0.0 || values_.back() != 0.0)
    throw InvalidField("Field1D: support must be interior (zero endpoints)");
}

double Field1D::interpolate(double x) const {
  const double s = x / dx_ + static_cast<double>(center_);
  if (s <= 0.0 || s >= static_cast<double>(values_.size() - 1)) {
    // exact node hit at the boundary still reads the stored (zero) sample
    if (s == 0.0) return values_.front();
    if (s == static_cast<double>(values_.size() - 1)) return values_.back();
    return 0.0;
  }
  const double fl = std::floor(s);
  const auto j = static_cast<std::size_t>(fl);
  const double w = s - fl;
  if (w == 0.0) return values_[j];
  return (1.0 - w) * values_[j] + w * values_[j + 1];
}

Field1D Field1D::trimmed() const {
  const auto n = static_cast<std::ptrdiff_t>(values_.size());
  std::ptrdiff_t first_nz = -1, last_nz = -1;
  for (std::ptrdiff_t j = 0; j < n; ++j) {
    if (values_[static_cast<std::size_t>(j)] != 0.0) {
      if (first_nz < 0) first_nz = j;
      last_nz = j;
    }
  }
  std::ptrdiff_t lo, hi;
  if (first_nz < 0) {
    lo = std::max<std::ptrdiff_t>(center_ - 1, 0);
    hi = std::min<std::ptrdiff_t>(center_ + 1, n - 1);
  } else {
    lo = std::max<std::ptrdiff_t>(std::min(first_nz - 1, center_ - 1), 0);
    hi = std::min<std::ptrdiff_t>(std::max(last_nz + 1, center_ + 1), n - 1);
  }
  if (hi - lo + 1 < 3 || values_[static_cast<std::size_t>(lo)] != 0.0 ||
      values_[static_cast<std::size_t>(hi)] != 0.0)
    return *this;
  std::vector<double> out(values_.begin() + lo, values_.begin() + hi + 1);
  return Field1D(dx_, center_ - lo, std::move(out), t_);
}

double mass(const Field1D& f) {
  double s = 0.0;
  for (double v : f.values()) s += v;
  return f.dx() * s;
}

double linf_norm(const Field1D& f) {
  double m = 0.0;
  for (double v : f.values()) m = std::max(m, std::abs(v));
  return m;
}

double l1_norm(const Field1D& f) {
  double s = 0.0;
  for (double v : f.values()) s += std::abs(v);
  return f.dx() * s;
}

namespace {

double unit_bump(double s) {
  const double r = 1.0 - s * s;
  if (r <= 0.0) return 0.0;
  return std::exp(1.0 - 1.0 / r);
}

}  // namespace

Field1D bump_field(double height, double width, double dx, double t) {
  if (!(width > 0.0) || !(dx > 0.0))
    throw InvalidField("bump_field: width and dx must be positive");
  const auto half = static_cast<std::ptrdiff_t>(std::ceil(width / dx)) + 1;
  std::vector<double> v(static_cast<std::size_t>(2 * half + 1), 0.0);
  for (std::ptrdiff_t j = -half; j <= half; ++j) {
    const double x = static_cast<double>(j) * dx;
    v[static_cast<std::size_t>(j + half)] = height * unit_bump(x / width);
  }
  v.front() = 0.0;
  v.back() = 0.0;
  return Field1D(dx, half, std::move(v), t);
}

double unit_bump_integral() {
  // composite midpoint; the integrand is smooth with all derivatives zero at
  // the endpoints, so this converges fast
  static const double cached = [] {
    const int n = 1 << 16;
    const double h = 2.0 / n;
    double s = 0.0;
    for (int i = 0; i < n; ++i) s += unit_bump(-1.0 + (i + 0.5) * h);
    return s * h;
  }();
  return cached;
}

Field1D bump_with_mass(double target_mass, double width, double dx, double t) {
  const double h = target_mass / (width * unit_bump_integral());
  return bump_field(h, width, dx, t);
}

namespace {

template <class Acc>
void aligned_visit(const Field1D& f, const Field1D& g, Acc&& acc) {
  const std::ptrdiff_t nf = static_cast<std::ptrdiff_t>(f.size());
  const std::ptrdiff_t ng = static_cast<std::ptrdiff_t>(g.size());
  const std::ptrdiff_t lo =
      std::min(-f.center(), -g.center());
  const std::ptrdiff_t hi =
      std::max(nf - 1 - f.center(), ng - 1 - g.center());
  for (std::ptrdiff_t k = lo; k <= hi; ++k) {
    const std::ptrdiff_t jf = k + f.center();
    const std::ptrdiff_t jg = k + g.center();
    const double a = (jf >= 0 && jf < nf)
                         ? f.values()[static_cast<std::size_t>(jf)]
                         : 0.0;
    const double b = (jg >= 0 && jg < ng)
                         ? g.values()[static_cast<std::size_t>(jg)]
                         : 0.0;
    acc(a, b);
  }
}

}  // namespace

double rel_diff_l1(const Field1D& f, const Field1D& g) {
  double num = 0.0, den = 0.0;
  aligned_visit(f, g, [&](double a, double b) {
    num += std::abs(a - b);
    den += std::abs(a);
  });
  if (den == 0.0) return num == 0.0 ? 0.0 : HUGE_VAL;
  return num / den;
}

double rel_diff_linf(const Field1D& f, const Field1D& g) {
  double num = 0.0, den = 0.0;
  aligned_visit(f, g, [&](double a, double b) {
    num = std::max(num, std::abs(a - b));
    den = std::max(den, std::abs(a));
  });
  if (den == 0.0) return num == 0.0 ? 0.0 : HUGE_VAL;
  return num / den;
}

}  // namespace rgscope
