#pragma once

#include <Eigen/Core>
#include <boost/multiprecision/cpp_int.hpp>

#include <type_traits>

// Boost 1.74 probes every constructor argument for a `const_iterator`
// typedef; Eigen 3.4 expressions have one, which breaks overload resolution
// for cpp_int construction inside Eigen kernels.
namespace boost::multiprecision::detail {
template <class C>
  requires requires { typename C::StorageKind; }
struct is_byte_container<C> : std::false_type {};
}  // namespace boost::multiprecision::detail

#include <boost/multiprecision/eigen.hpp>

namespace propo {

using Integer = boost::multiprecision::cpp_int;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntegerMatrix = Matrix<Integer>;

/// Exact trace of an integer matrix (Eigen's trace() defers to redux, which
/// is fine, but this keeps the accumulation type explicit).
template <typename Derived>
Integer exact_trace(const Eigen::MatrixBase<Derived>& m) {
  Integer t = 0;
  for (Eigen::Index i = 0; i < m.rows(); ++i) t += m(i, i);
  return t;
}

template <typename Derived>
Matrix<double> to_double(const Eigen::MatrixBase<Derived>& m) {
  Matrix<double> out(m.rows(), m.cols());
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      out(i, j) = static_cast<double>(m(i, j));
  return out;
}

}  // namespace propo
