#pragma once

#include <algorithm>
#include <cstddef>
#include <limits>
#include <string>
#include <vector>

namespace curvpinch {

/// Outcome of a sampled inequality check `value <= bound`.
struct CheckReport {
  std::string name;
  std::size_t samples = 0;
  std::size_t violations = 0;
  /// min over samples of bound - value; +inf when nothing was sampled.
  double min_slack = std::numeric_limits<double>::infinity();
  /// max over samples of |value| / bound (0 when bound and value vanish).
  double max_ratio = 0.0;
  /// number of samples with 0 <= slack < 1e-6
  std::size_t near_equality = 0;
  double tol = 1e-9;
  std::vector<std::string> warnings;

  bool passed() const { return violations == 0; }

  void record(double value, double bound) {
    ++samples;
    const double slack = bound - value;
    min_slack = std::min(min_slack, slack);
    if (slack < -tol) ++violations;
    if (slack >= -tol && slack < 1e-6) ++near_equality;
  }

  void record_ratio(double ratio) { max_ratio = std::max(max_ratio, ratio); }

  void merge(const CheckReport& o) {
    samples += o.samples;
    violations += o.violations;
    near_equality += o.near_equality;
    min_slack = std::min(min_slack, o.min_slack);
    max_ratio = std::max(max_ratio, o.max_ratio);
    warnings.insert(warnings.end(), o.warnings.begin(), o.warnings.end());
  }
};

}  // namespace curvpinch
