#pragma once

#include <Eigen/Dense>
#include <stdexcept>
#include <string>

namespace dsvm {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;
using ComplexVector = Eigen::VectorXcd;

/// A structural precondition failed; the message names the violated check.
class InvariantViolation : public std::runtime_error {
 public:
  explicit InvariantViolation(const std::string& what) : std::runtime_error(what) {}
};

class DimensionMismatch : public std::runtime_error {
 public:
  explicit DimensionMismatch(const std::string& what) : std::runtime_error(what) {}
};

/// Integration produced a non-finite or unbounded state.
class IntegrationDiverged : public std::runtime_error {
 public:
  explicit IntegrationDiverged(const std::string& what) : std::runtime_error(what) {}
};

class NumericalFailure : public std::runtime_error {
 public:
  explicit NumericalFailure(const std::string& what) : std::runtime_error(what) {}
};

/// Iterative solver hit its iteration cap before reaching tolerance.
class NonConvergence : public std::runtime_error {
 public:
  NonConvergence(const std::string& what, Vector last)
      : std::runtime_error(what), last_iterate(std::move(last)) {}
  Vector last_iterate;
};

class InvalidSpectrum : public std::runtime_error {
 public:
  explicit InvalidSpectrum(const std::string& what) : std::runtime_error(what) {}
};

/// Induced infinity norm: max absolute row sum.
inline double inf_norm(const Matrix& a) {
  return a.cwiseAbs().rowwise().sum().maxCoeff();
}

}  // namespace dsvm
