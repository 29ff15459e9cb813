#ifndef RGSCOPE_VALIDATE_HPP
#define RGSCOPE_VALIDATE_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace rgscope {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

std::vector<std::string> acceptance_check_names();

/// Runs the acceptance checks (all, or the subset named in `only`), printing
/// one PASS/FAIL line per check to `log` as results arrive.  jobs bounds
/// concurrent runs inside each check.
std::vector<CheckResult> run_acceptance(const std::vector<std::string>& only,
                                        int jobs, std::ostream& log);

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace rgscope

#endif
