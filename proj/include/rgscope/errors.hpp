#ifndef RGSCOPE_ERRORS_HPP
#define RGSCOPE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace rgscope {

struct InvalidField : std::runtime_error {
  explicit InvalidField(const std::string& what) : std::runtime_error(what) {}
};

struct InvalidParams : std::runtime_error {
  explicit InvalidParams(const std::string& what) : std::runtime_error(what) {}
};

struct NonPositiveCoefficient : std::runtime_error {
  explicit NonPositiveCoefficient(const std::string& what)
      : std::runtime_error(what) {}
};

struct UnstableConfiguration : std::runtime_error {
  explicit UnstableConfiguration(const std::string& what)
      : std::runtime_error(what) {}
};

struct SignViolation : std::runtime_error {
  explicit SignViolation(const std::string& what) : std::runtime_error(what) {}
};

struct NumericOverflow : std::runtime_error {
  explicit NumericOverflow(const std::string& what)
      : std::runtime_error(what) {}
};

struct NonPositiveOrigin : std::runtime_error {
  explicit NonPositiveOrigin(const std::string& what)
      : std::runtime_error(what) {}
};

struct DegenerateMarginal : std::runtime_error {
  explicit DegenerateMarginal(const std::string& what)
      : std::runtime_error(what) {}
};

struct TooFewPoints : std::runtime_error {
  explicit TooFewPoints(const std::string& what) : std::runtime_error(what) {}
};

struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace rgscope

#endif
