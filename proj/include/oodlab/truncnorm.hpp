#pragma once

#include "oodlab/common.hpp"
#include "oodlab/rng.hpp"

#include <vector>

namespace oodlab {

/// Normal(mean, variance) conditioned on [lower, upper].
struct TruncNormalParams {
  double mean = 0.0;
  double variance = 1.0;
  double lower = -1.0;
  double upper = 1.0;

  void validate() const {
    require(variance > 0.0, "truncated normal: variance must be > 0");
    require(lower < upper, "truncated normal: lower must be < upper");
  }
};

/// Rejection sampling from the parent normal. Throws after the acceptance
/// probability is observed below 1e-6 (degenerate window).
std::vector<double> sample_truncated_normal(const TruncNormalParams& params,
                                            std::size_t n, CounterRng& rng);

/// Mean of the truncated distribution via the standard closed form
/// (Phi/phi ratio); used by tests as an independent oracle and by the
/// harness when reporting preset statistics.
double truncated_normal_mean(const TruncNormalParams& params);

}  // namespace oodlab
