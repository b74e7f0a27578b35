#pragma once

#include <Eigen/Dense>
#include <stdexcept>
#include <string>

namespace oodlab {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using Index = Eigen::Index;

/// Error type for all contract violations (bad inputs, degenerate graphs,
/// ill-conditioned decompositions). Messages carry the failing quantity.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

inline void require(bool cond, const std::string& msg) {
  if (!cond) throw Error(msg);
}

}  // namespace oodlab
