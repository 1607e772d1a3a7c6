#pragma once

#include "propo/integer.hpp"
#include "propo/operator.hpp"

#include <cstddef>
#include <stdexcept>

namespace propo {

class ReducibleMatrixError : public std::runtime_error {
 public:
  explicit ReducibleMatrixError(const std::string& what) : std::runtime_error(what) {}
};

struct PerronPair {
  double value = 0.0;
  Vector<double> vector;  // strictly positive, max entry 1
  std::size_t iterations = 0;
};

struct PowerIterationOptions {
  double tolerance = 1e-12;  // relative
  std::size_t max_iterations = 1'000'000;
};

/// True when the nonzero pattern of a square matrix is a strongly connected
/// digraph (edge i -> j for entry (j, i) != 0).
bool is_irreducible(const IntegerMatrix& m);

/// Perron root of a nonnegative irreducible matrix by power iteration on
/// M + I (the shift makes the iteration primitive). The iteration stops when
/// the Collatz-Wielandt bracket
///   min_i (Ax)_i / x_i  <=  rho(A)  <=  max_i (Ax)_i / x_i
/// is narrower than `tolerance` relative, and reports its midpoint.
template <typename Derived>
PerronPair power_iteration_shifted(const Eigen::MatrixBase<Derived>& m,
                                   const PowerIterationOptions& options = {}) {
  const Eigen::Index n = m.rows();
  const Matrix<double> shifted = m + Matrix<double>::Identity(n, n);
  Vector<double> x = Vector<double>::Ones(n);
  for (std::size_t iter = 1; iter <= options.max_iterations; ++iter) {
    Vector<double> y = shifted * x;
    const Vector<double> ratio = y.cwiseQuotient(x);
    const double lower = ratio.minCoeff();
    const double upper = ratio.maxCoeff();
    x = y / y.maxCoeff();
    if (upper - lower <= options.tolerance * upper) {
      return {0.5 * (lower + upper) - 1.0, x, iter};
    }
  }
  throw std::runtime_error("power iteration did not converge");
}

/// Checks nonnegativity and irreducibility, then runs the shifted iteration.
PerronPair power_iteration(const OperatorMatrix& matrix, const PowerIterationOptions& options = {});

}  // namespace propo
