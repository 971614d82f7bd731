#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "sonc/dualphos.hpp"

namespace sonc {

struct SelftestCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct SelftestOptions {
  /// Closed-form bound under test; replaceable so that a perturbed formula can
  /// be shown to fail.
  std::function<double(int, const EtaPoint&)> closed_form = closed_form_bound;
  std::uint64_t seed = 7;
  std::uint64_t points = 100;
};

std::vector<SelftestCheck> run_selftest(const SelftestOptions& options = {});

/// Theta-sum of the weighted cover of x^4y^2 + x^2 + y + 1 - c x^2 y that gives
/// weight w of the (4,2) coefficient to the triangle {(4,2),(2,0),(0,1)} and
/// 1 - w to the segment {(0,0),(4,2)}.
double toy_weighted_theta(double w);

}  // namespace sonc
