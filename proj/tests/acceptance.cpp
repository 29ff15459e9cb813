#include <iostream>

#include "rgscope/validate.hpp"

int main() {
  const auto results = rgscope::run_acceptance({}, 1, std::cout);
  return rgscope::all_passed(results) ? 0 : 1;
}
