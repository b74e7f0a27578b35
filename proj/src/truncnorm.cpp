#include "oodlab/truncnorm.hpp"

#include <cmath>

namespace oodlab {

std::vector<double> sample_truncated_normal(const TruncNormalParams& params,
                                            std::size_t n, CounterRng& rng) {
  params.validate();
  const double sd = std::sqrt(params.variance);
  std::vector<double> out;
  out.reserve(n);
  std::uint64_t attempts = 0;
  while (out.size() < n) {
    const double x = params.mean + sd * rng.next_normal();
    ++attempts;
    if (x >= params.lower && x <= params.upper) {
      out.push_back(x);
    }
    // Acceptance below 1e-6 would loop ~forever; fail loudly instead.
    if (attempts > 1000000ULL && out.size() < attempts / 1000000ULL) {
      throw Error("degenerate truncation window");
    }
  }
  return out;
}

double truncated_normal_mean(const TruncNormalParams& params) {
  params.validate();
  const double sd = std::sqrt(params.variance);
  const double a = (params.lower - params.mean) / sd;
  const double b = (params.upper - params.mean) / sd;
  const auto phi = [](double x) {
    return std::exp(-0.5 * x * x) / std::sqrt(2.0 * M_PI);
  };
  const auto Phi = [](double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); };
  const double z = Phi(b) - Phi(a);
  require(z > 0.0, "degenerate truncation window");
  return params.mean + sd * (phi(a) - phi(b)) / z;
}

}  // namespace oodlab
