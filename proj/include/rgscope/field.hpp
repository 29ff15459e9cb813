#ifndef RGSCOPE_FIELD_HPP
#define RGSCOPE_FIELD_HPP

#include <cstddef>
#include <vector>

namespace rgscope {

/// A compactly supported function sampled on a uniform mesh.
///
/// Sample j lives at x = (j - center) * dx.  The first and last samples are
/// required to be exactly zero, so the support never touches the array
/// boundary and centered stencils can treat the exterior as zero.
class Field1D {
 public:
  Field1D(double dx, std::ptrdiff_t center, std::vector<double> values,
          double t);

  double dx() const { return dx_; }
  std::ptrdiff_t center() const { return center_; }
  double t() const { return t_; }
  const std::vector<double>& values() const { return values_; }
  std::size_t size() const { return values_.size(); }

  /// Position of sample j.
  double x_at(std::ptrdiff_t j) const {
    return static_cast<double>(j - center_) * dx_;
  }

  /// Value at x = 0.
  double origin_value() const { return values_[static_cast<std::size_t>(center_)]; }

  /// Value at position x by canonical node-based linear interpolation;
  /// zero outside the sampled range.
  double interpolate(double x) const;

  /// Copy with leading/trailing exact zeros removed, keeping one zero
  /// sentinel on each side.  Values and mass are unchanged.
  Field1D trimmed() const;

  Field1D with_time(double t) const { return Field1D(dx_, center_, values_, t); }

 private:
  double dx_;
  std::ptrdiff_t center_;
  std::vector<double> values_;
  double t_;
};

/// Discrete integral dx * sum(values).
double mass(const Field1D& f);

double linf_norm(const Field1D& f);
double l1_norm(const Field1D& f);

/// Smooth compactly supported bump h * exp(1 - 1/(1 - (x/w)^2)) for |x| < w.
Field1D bump_field(double height, double width, double dx, double t = 1.0);

/// Integral of the unit bump exp(1 - 1/(1 - s^2)) over [-1, 1]; the bump of
/// width w and height h has mass h * w * this.
double unit_bump_integral();

/// Bump with the requested mass: the height is solved from the unit bump
/// integral.
Field1D bump_with_mass(double target_mass, double width, double dx,
                       double t = 1.0);

/// Relative difference ||f - g|| / ||f|| with samples aligned at the center
/// index; nodes present in only one field count as zero in the other.
double rel_diff_l1(const Field1D& f, const Field1D& g);
double rel_diff_linf(const Field1D& f, const Field1D& g);

}  // namespace rgscope

#endif
