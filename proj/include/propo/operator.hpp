#pragma once

#include "propo/integer.hpp"
#include "propo/table.hpp"

namespace propo {

/// Matrix of c1^ = (c1 * -)|_{q=1} in the table's basis. Column i is the
/// image of basis[i]; entry (j, i) is the coefficient of basis[j].
struct OperatorMatrix {
  IntegerMatrix entries;

  Eigen::Index dim() const noexcept { return entries.rows(); }
  friend bool operator==(const OperatorMatrix& a, const OperatorMatrix& b) {
    return a.entries.rows() == b.entries.rows() && a.entries.cols() == b.entries.cols() &&
           a.entries == b.entries;
  }
};

/// entry(j, i) = m * (sum over q-powers of the coefficients of alpha_j in h*alpha_i).
OperatorMatrix build_c1hat(const ChevalleyTable& table);

template <typename Derived>
bool check_nonnegative(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      if (m(i, j) < Scalar(0)) return false;
  return true;
}

inline bool check_nonnegative(const OperatorMatrix& m) { return check_nonnegative(m.entries); }

}  // namespace propo
