#include "propo/power_iteration.hpp"

#include "propo/graph.hpp"

namespace propo {

bool is_irreducible(const IntegerMatrix& m) {
  if (m.rows() != m.cols()) return false;
  std::vector<BasisElement> vertices;
  for (Eigen::Index i = 0; i < m.rows(); ++i) vertices.push_back({"v" + std::to_string(i), 0});
  std::vector<Edge> edges;
  for (Eigen::Index i = 0; i < m.cols(); ++i)
    for (Eigen::Index j = 0; j < m.rows(); ++j)
      if (m(j, i) != 0)
        edges.push_back({static_cast<std::size_t>(i), static_cast<std::size_t>(j), 1, 0});
  const QuantumBruhatGraph pattern(std::move(vertices), std::move(edges), 1);
  return strongly_connected(pattern).strongly_connected;
}

PerronPair power_iteration(const OperatorMatrix& matrix, const PowerIterationOptions& options) {
  if (!check_nonnegative(matrix)) throw ReducibleMatrixError("matrix has negative entries");
  if (!is_irreducible(matrix.entries)) throw ReducibleMatrixError("matrix is reducible");
  return power_iteration_shifted(to_double(matrix.entries), options);
}

}  // namespace propo
