#include "propo/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

namespace propo {

QuantumBruhatGraph::QuantumBruhatGraph(std::vector<BasisElement> vertices,
                                       std::vector<Edge> edges, int fano_index)
    : vertices_(std::move(vertices)),
      edges_(std::move(edges)),
      out_(vertices_.size()),
      fano_index_(fano_index) {
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const auto& e : edges_) {
    if (e.source >= vertices_.size() || e.target >= vertices_.size())
      throw GraphError("edge endpoint out of range");
    if (!seen.emplace(e.source, e.target).second)
      throw GraphError("parallel edge " + vertices_[e.source].name + " -> " +
                       vertices_[e.target].name);
    out_[e.source].push_back(e.target);
  }
  for (auto& succ : out_) std::sort(succ.begin(), succ.end());
}

bool QuantumBruhatGraph::has_edge(std::size_t from, std::size_t to) const {
  if (from >= out_.size()) return false;
  const auto& succ = out_[from];
  return std::binary_search(succ.begin(), succ.end(), to);
}

std::optional<std::size_t> QuantumBruhatGraph::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    if (vertices_[i].name == name) return i;
  return std::nullopt;
}

QuantumBruhatGraph build_graph(const ChevalleyTable& table) {
  std::vector<Edge> edges;
  for (std::size_t s = 0; s < table.size(); ++s)
    for (const auto& t : table.row(s))
      edges.push_back({s, t.target, table.anticanonical_multiple() * t.coefficient, t.q_power});
  return QuantumBruhatGraph(table.basis(), std::move(edges), table.fano_index());
}

ConnectivityResult strongly_connected(const QuantumBruhatGraph& graph) {
  // Iterative Tarjan.
  const std::size_t n = graph.vertex_count();
  constexpr std::size_t unvisited = static_cast<std::size_t>(-1);
  std::vector<std::size_t> index(n, unvisited), low(n, 0), raw_component(n, unvisited);
  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> stack;
  std::size_t next_index = 0, raw_count = 0;

  struct Frame {
    std::size_t vertex;
    std::size_t next_child;
  };
  for (std::size_t root = 0; root < n; ++root) {
    if (index[root] != unvisited) continue;
    std::vector<Frame> call{{root, 0}};
    index[root] = low[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!call.empty()) {
      auto& frame = call.back();
      const auto v = frame.vertex;
      const auto& succ = graph.successors(v);
      if (frame.next_child < succ.size()) {
        const auto w = succ[frame.next_child++];
        if (index[w] == unvisited) {
          index[w] = low[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = true;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      if (low[v] == index[v]) {
        std::size_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          raw_component[w] = raw_count;
        } while (w != v);
        ++raw_count;
      }
      call.pop_back();
      if (!call.empty()) {
        const auto parent = call.back().vertex;
        low[parent] = std::min(low[parent], low[v]);
      }
    }
  }

  ConnectivityResult result;
  result.component_of.assign(n, 0);
  std::vector<std::size_t> renumber(raw_count, unvisited);
  for (std::size_t v = 0; v < n; ++v) {
    auto& id = renumber[raw_component[v]];
    if (id == unvisited) id = result.component_count++;
    result.component_of[v] = id;
  }
  result.strongly_connected = result.component_count == 1;
  return result;
}

PeriodResult period(const QuantumBruhatGraph& graph) {
  if (!strongly_connected(graph).strongly_connected)
    throw GraphError("period is only defined for strongly connected graphs");
  if (graph.edges().empty()) throw GraphError("period is undefined for a graph without edges");

  constexpr long long unreached = -1;
  std::vector<long long> level(graph.vertex_count(), unreached);
  std::queue<std::size_t> frontier;
  level[0] = 0;
  frontier.push(0);
  while (!frontier.empty()) {
    const auto v = frontier.front();
    frontier.pop();
    for (auto w : graph.successors(v)) {
      if (level[w] != unreached) continue;
      level[w] = level[v] + 1;
      frontier.push(w);
    }
  }

  long long g = 0;
  for (const auto& e : graph.edges())
    g = std::gcd(g, level[e.source] + 1 - level[e.target]);

  PeriodResult result;
  result.period = static_cast<int>(g);
  result.divides_fano_index = graph.fano_index() % result.period == 0;
  result.equals_fano_index = graph.fano_index() == result.period;
  return result;
}

namespace {

bool extend_simple(const QuantumBruhatGraph& graph, std::size_t start, std::size_t length,
                   std::vector<std::size_t>& path, std::vector<bool>& on_path) {
  const auto v = path.back();
  const std::size_t depth = path.size() - 1;
  for (auto w : graph.successors(v)) {
    if (depth + 1 == length) {
      if (w == start) {
        path.push_back(w);
        return true;
      }
      continue;
    }
    if (w <= start || on_path[w]) continue;
    path.push_back(w);
    on_path[w] = true;
    if (extend_simple(graph, start, length, path, on_path)) return true;
    on_path[w] = false;
    path.pop_back();
  }
  return false;
}

std::optional<Cycle> closed_walk(const QuantumBruhatGraph& graph, std::size_t length) {
  const std::size_t n = graph.vertex_count();
  for (std::size_t s = 0; s < n; ++s) {
    // reach[k][v]: some walk of length k leads from s to v.
    std::vector<std::vector<bool>> reach(length + 1, std::vector<bool>(n, false));
    reach[0][s] = true;
    for (std::size_t k = 0; k < length; ++k)
      for (std::size_t v = 0; v < n; ++v)
        if (reach[k][v])
          for (auto w : graph.successors(v)) reach[k + 1][w] = true;
    if (!reach[length][s]) continue;

    std::vector<std::size_t> walk{s};
    std::size_t current = s;
    for (std::size_t k = length; k > 0; --k) {
      for (std::size_t u = 0; u < n; ++u) {
        if (reach[k - 1][u] && graph.has_edge(u, current)) {
          current = u;
          break;
        }
      }
      walk.push_back(current);
    }
    std::reverse(walk.begin(), walk.end());
    return Cycle{std::move(walk), false};
  }
  return std::nullopt;
}

}  // namespace

std::optional<Cycle> find_cycle_of_length(const QuantumBruhatGraph& graph, std::size_t length) {
  if (length == 0) return std::nullopt;
  const std::size_t n = graph.vertex_count();
  if (length <= n) {
    std::vector<bool> on_path(n, false);
    for (std::size_t s = 0; s < n; ++s) {
      std::vector<std::size_t> path{s};
      on_path.assign(n, false);
      on_path[s] = true;
      if (extend_simple(graph, s, length, path, on_path)) return Cycle{std::move(path), true};
    }
  }
  return closed_walk(graph, length);
}

bool validate_cycle(const QuantumBruhatGraph& graph, const Cycle& cycle) {
  const auto& v = cycle.vertices;
  if (v.size() < 2 || v.front() != v.back()) return false;
  for (std::size_t i = 0; i + 1 < v.size(); ++i)
    if (!graph.has_edge(v[i], v[i + 1])) return false;
  return true;
}

Cycle cycle_from_names(const QuantumBruhatGraph& graph, const std::vector<std::string>& names) {
  Cycle cycle;
  for (const auto& name : names) {
    const auto idx = graph.index_of(name);
    if (!idx) throw GraphError("unknown vertex '" + name + "'");
    cycle.vertices.push_back(*idx);
  }
  std::set<std::size_t> distinct(cycle.vertices.begin(),
                                 cycle.vertices.empty() ? cycle.vertices.end()
                                                        : cycle.vertices.end() - 1);
  cycle.simple = !cycle.vertices.empty() && distinct.size() == cycle.length();
  return cycle;
}

std::string format_cycle(const QuantumBruhatGraph& graph, const Cycle& cycle) {
  std::string out;
  for (std::size_t i = 0; i < cycle.vertices.size(); ++i) {
    if (i) out += ' ';
    out += graph.vertices()[cycle.vertices[i]].name;
  }
  return out;
}

std::string export_dot(const QuantumBruhatGraph& graph, const DotOptions& options) {
  std::set<std::pair<std::size_t, std::size_t>> bold;
  if (options.highlight) {
    const auto& v = options.highlight->vertices;
    for (std::size_t i = 0; i + 1 < v.size(); ++i) bold.emplace(v[i], v[i + 1]);
  }

  std::map<int, std::vector<std::size_t>> by_degree;
  for (std::size_t i = 0; i < graph.vertex_count(); ++i)
    by_degree[graph.vertices()[i].degree].push_back(i);

  const auto quoted = [&](std::size_t i) { return "\"" + graph.vertices()[i].name + "\""; };
  std::ostringstream out;
  out << "digraph " << options.graph_name << " {\n"
      << "  rankdir=TB;\n"
      << "  node [shape=plaintext];\n";
  for (const auto& [degree, members] : by_degree) {
    out << "  { rank=same;";
    for (auto i : members) out << ' ' << quoted(i) << ';';
    out << " }  // degree " << degree << '\n';
  }
  for (const auto& e : graph.edges()) {
    std::vector<std::string> attrs;
    if (e.q_power > 0) {
      attrs.push_back("constraint=false");
      attrs.push_back("color=gray40");
      if (options.show_q_powers)
        attrs.push_back(e.q_power == 1 ? "label=\"q\"" : "label=\"q^" + std::to_string(e.q_power) + "\"");
    }
    if (bold.count({e.source, e.target})) {
      attrs.push_back("style=bold");
      attrs.push_back("penwidth=3");
    }
    out << "  " << quoted(e.source) << " -> " << quoted(e.target);
    if (!attrs.empty()) {
      out << " [";
      for (std::size_t k = 0; k < attrs.size(); ++k) out << (k ? ", " : "") << attrs[k];
      out << ']';
    }
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace propo
