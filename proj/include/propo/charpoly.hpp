#pragma once

#include "propo/integer.hpp"

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace propo {

/// Dense univariate polynomial, coefficients in ascending order of degree.
template <typename Scalar>
struct Polynomial {
  std::vector<Scalar> coefficients;

  std::size_t degree() const noexcept {
    return coefficients.empty() ? 0 : coefficients.size() - 1;
  }
  const Scalar& operator[](std::size_t k) const { return coefficients[k]; }
  friend bool operator==(const Polynomial&, const Polynomial&) = default;
};

/// det(lambda*I - M) with exact integer coefficients; monic.
using CharPoly = Polynomial<Integer>;

namespace detail {
template <typename Scalar>
Scalar divide_exact(const Scalar& numerator, long long k) {
  if constexpr (std::is_same_v<Scalar, Integer>) {
    Integer q, r;
    boost::multiprecision::divide_qr(numerator, Integer(k), q, r);
    if (r != 0) throw std::logic_error("Faddeev-LeVerrier division was not exact");
    return q;
  } else {
    return numerator / Scalar(k);
  }
}
}  // namespace detail

/// Faddeev-LeVerrier recurrence:
///   N_0 = 0, c_n = 1,
///   N_k = M N_{k-1} + c_{n-k+1} I,   c_{n-k} = -tr(M N_k) / k.
/// Over the integers every division by k is exact.
template <typename Derived>
Polynomial<typename Derived::Scalar> characteristic_polynomial(
    const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  if (m.rows() != m.cols()) throw std::invalid_argument("characteristic_polynomial: matrix is not square");
  const Eigen::Index n = m.rows();
  Polynomial<Scalar> p;
  p.coefficients.assign(static_cast<std::size_t>(n) + 1, Scalar(0));
  p.coefficients[static_cast<std::size_t>(n)] = Scalar(1);

  const Matrix<Scalar> a = m;
  Matrix<Scalar> aux = Matrix<Scalar>::Zero(n, n);
  for (Eigen::Index k = 1; k <= n; ++k) {
    Matrix<Scalar> next = a * aux;
    const Scalar& previous = p.coefficients[static_cast<std::size_t>(n - k + 1)];
    for (Eigen::Index i = 0; i < n; ++i) next(i, i) += previous;
    aux = std::move(next);
    Scalar t(0);
    for (Eigen::Index i = 0; i < n; ++i) t += a.row(i).dot(aux.col(i));
    p.coefficients[static_cast<std::size_t>(n - k)] =
        detail::divide_exact<Scalar>(-t, static_cast<long long>(k));
  }
  return p;
}

template <typename Scalar>
Polynomial<Scalar> derivative(const Polynomial<Scalar>& p) {
  Polynomial<Scalar> d;
  for (std::size_t k = 1; k < p.coefficients.size(); ++k)
    d.coefficients.push_back(p.coefficients[k] * Scalar(static_cast<long long>(k)));
  if (d.coefficients.empty()) d.coefficients.push_back(Scalar(0));
  return d;
}

/// Horner evaluation at any type the coefficients convert to.
template <typename Scalar, typename Point>
Point evaluate(const Polynomial<Scalar>& p, const Point& x) {
  Point acc(0);
  for (auto it = p.coefficients.rbegin(); it != p.coefficients.rend(); ++it)
    acc = acc * x + Point(static_cast<double>(*it));
  return acc;
}

}  // namespace propo
