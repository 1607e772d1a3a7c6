#include "propo/operator.hpp"

namespace propo {

OperatorMatrix build_c1hat(const ChevalleyTable& table) {
  const auto n = static_cast<Eigen::Index>(table.size());
  IntegerMatrix m = IntegerMatrix::Zero(n, n);
  const Integer multiple = table.anticanonical_multiple();
  for (Eigen::Index i = 0; i < n; ++i)
    for (const auto& term : table.row(static_cast<std::size_t>(i)))
      m(static_cast<Eigen::Index>(term.target), i) += multiple * term.coefficient;
  return {std::move(m)};
}

}  // namespace propo
