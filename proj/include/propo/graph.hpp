#pragma once

#include "propo/table.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace propo {

class GraphError : public std::runtime_error {
 public:
  explicit GraphError(const std::string& what) : std::runtime_error(what) {}
};

struct Edge {
  std::size_t source = 0;
  std::size_t target = 0;
  std::int64_t weight = 0;  // matching c1^ entry
  int q_power = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Quantum Bruhat graph: alpha_i -> alpha_j whenever alpha_j appears in
/// h*alpha_i with positive coefficient. At most one edge per ordered pair.
class QuantumBruhatGraph {
 public:
  QuantumBruhatGraph(std::vector<BasisElement> vertices, std::vector<Edge> edges,
                     int fano_index);

  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  const std::vector<BasisElement>& vertices() const noexcept { return vertices_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  int fano_index() const noexcept { return fano_index_; }

  /// Out-neighbours of v in ascending index order.
  const std::vector<std::size_t>& successors(std::size_t v) const { return out_.at(v); }
  bool has_edge(std::size_t from, std::size_t to) const;
  std::optional<std::size_t> index_of(const std::string& name) const;

 private:
  std::vector<BasisElement> vertices_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> out_;
  int fano_index_;
};

QuantumBruhatGraph build_graph(const ChevalleyTable& table);

struct ConnectivityResult {
  bool strongly_connected = false;
  std::size_t component_count = 0;
  /// Component ids are numbered in order of each component's lowest vertex.
  std::vector<std::size_t> component_of;
};

ConnectivityResult strongly_connected(const QuantumBruhatGraph& graph);

struct PeriodResult {
  int period = 0;
  bool divides_fano_index = false;
  bool equals_fano_index = false;
};

/// Index of imprimitivity: gcd over edges u->v of level(u) + 1 - level(v),
/// levels being BFS distances from vertex 0. Throws GraphError unless the
/// graph is strongly connected with at least one edge.
PeriodResult period(const QuantumBruhatGraph& graph);

/// Closed walk v0 v1 ... v_{L-1} v0; `vertices` holds all L + 1 entries.
struct Cycle {
  std::vector<std::size_t> vertices;
  bool simple = true;

  std::size_t length() const noexcept { return vertices.empty() ? 0 : vertices.size() - 1; }
  friend bool operator==(const Cycle&, const Cycle&) = default;
};

/// First simple cycle of length L in DFS order (start vertices ascending,
/// successors ascending, all other vertices of the cycle above the start).
/// Falls back to a closed walk of length L, flagged `simple = false`.
std::optional<Cycle> find_cycle_of_length(const QuantumBruhatGraph& graph, std::size_t length);

/// True when the walk is closed, nonempty and every step is an edge.
bool validate_cycle(const QuantumBruhatGraph& graph, const Cycle& cycle);

/// Resolves basis names ("a18,a11,...,a18") to a cycle; throws GraphError on
/// unknown names. Simplicity is recomputed from the vertex list.
Cycle cycle_from_names(const QuantumBruhatGraph& graph, const std::vector<std::string>& names);

std::string format_cycle(const QuantumBruhatGraph& graph, const Cycle& cycle);

struct DotOptions {
  std::string graph_name = "qbg";
  std::optional<Cycle> highlight;
  bool show_q_powers = true;
};

/// Graphviz digraph, one `rank=same` group per cohomological degree.
std::string export_dot(const QuantumBruhatGraph& graph, const DotOptions& options = {});

}  // namespace propo
