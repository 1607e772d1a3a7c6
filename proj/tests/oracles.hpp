#pragma once
// Test-only reference data and independent oracles. Nothing here may call
// into the code paths it is used to check.

#include "propo/graph.hpp"
#include "propo/integer.hpp"

#include <cstdint>
#include <map>
#include <numeric>
#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

using propo::Integer;
using propo::IntegerMatrix;

/// c1^(source) = sum coef * target, transcribed as printed (already scaled
/// by the anticanonical multiple). Basis order is one, h, a1, a2, ...
struct Transcription {
  std::string name;
  int fano_index;
  std::size_t extra;  // number of alpha_i
  std::vector<std::pair<std::string, std::vector<std::pair<int, std::string>>>> images;
  std::map<std::string, int> figure_degree;  // minus the figure's y coordinate
  std::vector<std::string> printed_cycle;
};

inline std::vector<std::string> basis_names(std::size_t extra) {
  std::vector<std::string> names{"one", "h"};
  for (std::size_t i = 1; i <= extra; ++i) names.push_back("a" + std::to_string(i));
  return names;
}

inline IntegerMatrix matrix_of(const Transcription& t) {
  const auto names = basis_names(t.extra);
  std::map<std::string, Eigen::Index> idx;
  for (std::size_t i = 0; i < names.size(); ++i) idx[names[i]] = static_cast<Eigen::Index>(i);
  const auto n = static_cast<Eigen::Index>(names.size());
  IntegerMatrix m = IntegerMatrix::Zero(n, n);
  for (const auto& [src, terms] : t.images)
    for (const auto& [coef, tgt] : terms) m(idx.at(tgt), idx.at(src)) += coef;
  return m;
}

inline std::size_t nonzero_terms(const Transcription& t) {
  std::size_t count = 0;
  for (const auto& image : t.images) count += image.second.size();
  return count;
}

inline Transcription case1() {
  Transcription t{"case1_n3", 5, 18, {}, {}, {"a18", "a11", "a14", "a15", "a17", "a18"}};
  t.images = {
      {"one", {{5, "h"}}},
      {"h", {{10, "a1"}, {5, "a2"}}},
      {"a1", {{5, "a3"}, {5, "a4"}}},
      {"a2", {{10, "a3"}, {5, "a5"}}},
      {"a3", {{10, "a6"}, {5, "a7"}, {5, "a8"}}},
      {"a4", {{5, "a6"}, {10, "a7"}}},
      {"a5", {{5, "a8"}}},
      {"a6", {{10, "a9"}, {5, "a10"}, {5, "a11"}}},
      {"a7", {{5, "a10"}}},
      {"a8", {{5, "a11"}, {5, "one"}}},
      {"a9", {{5, "a12"}, {5, "a13"}}},
      {"a10", {{10, "a13"}, {5, "a14"}}},
      {"a11", {{5, "a12"}, {5, "a14"}, {5, "h"}}},
      {"a12", {{5, "a15"}, {5, "a1"}}},
      {"a13", {{5, "a15"}, {5, "a16"}}},
      {"a14", {{5, "a15"}, {5, "a2"}}},
      {"a15", {{5, "a17"}, {5, "a3"}}},
      {"a16", {{5, "a17"}, {5, "a5"}}},
      {"a17", {{5, "a18"}, {5, "a6"}, {5, "a8"}}},
      {"a18", {{5, "a9"}, {5, "a11"}, {10, "one"}}},
  };
  t.figure_degree = {{"one", 0}, {"h", 1},    {"a1", 2},   {"a2", 2},   {"a3", 3},
                     {"a4", 3},  {"a5", 3},   {"a6", 4},   {"a7", 4},   {"a8", 4},
                     {"a9", 5},  {"a10", 5},  {"a11", 5},  {"a12", 6},  {"a13", 6},
                     {"a14", 6}, {"a15", 7},  {"a16", 7},  {"a17", 8},  {"a18", 9}};
  return t;
}

inline Transcription case2() {
  Transcription t{"case2", 7, 12, {}, {}, {"a12", "a2", "a4", "a6", "a8", "a10", "a11", "a12"}};
  t.images = {
      {"one", {{7, "h"}}},
      {"h", {{7, "a1"}}},
      {"a1", {{14, "a2"}, {7, "a3"}}},
      {"a2", {{7, "a4"}, {7, "a5"}}},
      {"a3", {{7, "a5"}}},
      {"a4", {{7, "a6"}, {7, "a7"}}},
      {"a5", {{7, "a7"}}},
      {"a6", {{7, "a8"}}},
      {"a7", {{7, "a8"}, {7, "a9"}}},
      {"a8", {{7, "a10"}}},
      {"a9", {{7, "a10"}, {7, "one"}}},
      {"a10", {{7, "a11"}, {7, "h"}}},
      {"a11", {{7, "a12"}, {7, "a1"}}},
      {"a12", {{7, "a2"}}},
  };
  t.figure_degree = {{"one", 0}, {"h", 1},   {"a1", 2},  {"a3", 3},  {"a2", 3},
                     {"a5", 4},  {"a4", 4},  {"a7", 5},  {"a6", 5},  {"a9", 6},
                     {"a8", 6},  {"a10", 7}, {"a11", 8}, {"a12", 9}};
  return t;
}

inline Transcription case5() {
  Transcription t{"case5", 4, 10, {}, {}, {"a10", "a6", "a7", "a9", "a10"}};
  t.images = {
      {"one", {{4, "h"}}},
      {"h", {{12, "a1"}, {4, "a2"}}},
      {"a1", {{8, "a3"}, {4, "a4"}}},
      {"a2", {{4, "a4"}}},
      {"a3", {{12, "a5"}, {4, "a6"}}},
      {"a4", {{4, "a6"}, {4, "one"}}},
      {"a5", {{4, "a7"}, {4, "a8"}}},
      {"a6", {{8, "a7"}, {4, "h"}}},
      {"a7", {{4, "a9"}, {4, "a1"}}},
      {"a8", {{4, "a9"}, {4, "a2"}}},
      {"a9", {{4, "a10"}, {4, "a3"}, {4, "a4"}}},
      {"a10", {{4, "a5"}, {4, "a6"}, {8, "one"}}},
  };
  t.figure_degree = {{"one", 0}, {"h", 1},  {"a1", 2}, {"a2", 2}, {"a3", 3}, {"a4", 3},
                     {"a5", 4},  {"a6", 4}, {"a7", 5}, {"a8", 5}, {"a9", 6}, {"a10", 7}};
  return t;
}

/// For every transcribed term, deg(s) + 1 - deg(t) must be r * d with
/// integral d >= 0 when degrees are the figure layers. Returns the q-power of
/// each term keyed by (source, target), or an empty map on failure.
inline std::map<std::pair<std::string, std::string>, int> solve_q_powers(const Transcription& t) {
  std::map<std::pair<std::string, std::string>, int> q;
  for (const auto& [src, terms] : t.images)
    for (const auto& [coef, tgt] : terms) {
      const int shift = t.figure_degree.at(src) + 1 - t.figure_degree.at(tgt);
      if (shift < 0 || shift % t.fano_index != 0) return {};
      q[{src, tgt}] = shift / t.fano_index;
    }
  return q;
}

inline std::vector<std::size_t> layer_histogram(const Transcription& t) {
  std::vector<std::size_t> h;
  for (const auto& [name, d] : t.figure_degree) {
    if (h.size() <= static_cast<std::size_t>(d)) h.resize(static_cast<std::size_t>(d) + 1, 0);
    ++h[static_cast<std::size_t>(d)];
  }
  return h;
}

/// Period as gcd{k <= 2n : trace(M^k) > 0}, exact integer powers.
inline int trace_gcd_period(const IntegerMatrix& m) {
  const Eigen::Index n = m.rows();
  IntegerMatrix power = IntegerMatrix::Identity(n, n);
  int g = 0;
  for (int k = 1; k <= 2 * n; ++k) {
    power = (power * m).eval();
    Integer t = 0;
    for (Eigen::Index i = 0; i < n; ++i) t += power(i, i);
    if (t > 0) g = std::gcd(g, k);
  }
  return g;
}

/// Adjacency-style matrix: entry (j, i) = weight of edge i -> j.
inline IntegerMatrix adjacency(const propo::QuantumBruhatGraph& g) {
  const auto n = static_cast<Eigen::Index>(g.vertex_count());
  IntegerMatrix m = IntegerMatrix::Zero(n, n);
  for (const auto& e : g.edges())
    m(static_cast<Eigen::Index>(e.target), static_cast<Eigen::Index>(e.source)) = 1;
  return m;
}

/// Brute-force reachability closure; strongly connected iff all pairs reach.
inline bool brute_strongly_connected(const propo::QuantumBruhatGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) reach[i][i] = true;
  for (const auto& e : g.edges()) reach[e.source][e.target] = true;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (reach[i][k] && reach[k][j]) reach[i][j] = true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!reach[i][j]) return false;
  return true;
}

inline std::vector<propo::BasisElement> plain_vertices(std::size_t n) {
  std::vector<propo::BasisElement> v;
  for (std::size_t i = 0; i < n; ++i) v.push_back({"v" + std::to_string(i), 0});
  return v;
}

/// Random strongly connected digraph with 2..12 vertices. Odd draws are
/// unstructured (random spanning cycle plus noise edges); even draws put the
/// vertices into p cyclic classes and only add class c -> c+1 edges, so
/// periods above 1 occur often.
inline propo::QuantumBruhatGraph random_strong_digraph(std::mt19937_64& rng, std::size_t draw) {
  std::uniform_int_distribution<std::size_t> size_dist(2, 12);
  const std::size_t n = size_dist(rng);
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);

  std::size_t classes = 1;
  std::vector<std::size_t> cls(n, 0);
  if (draw % 2 == 0) {
    classes = std::uniform_int_distribution<std::size_t>(1, std::min<std::size_t>(n, 5))(rng);
    // Spread the shuffled order across classes so every class is populated.
    for (std::size_t i = 0; i < n; ++i) cls[order[i]] = i % classes;
  }

  // order[i] has class i % classes, so the chain order[0] -> ... -> order[n-1]
  // steps class by +1; close it through order[c] (class c) back to order[0].
  std::set<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i + 1 < n; ++i) edges.emplace(order[i], order[i + 1]);
  std::size_t current = order[n - 1];
  for (std::size_t c = cls[current]; c + 1 < classes; ++c) {
    edges.emplace(current, order[c + 1]);
    current = order[c + 1];
  }
  edges.emplace(current, order[0]);

  std::uniform_int_distribution<std::size_t> vertex(0, n - 1);
  const std::size_t extra = std::uniform_int_distribution<std::size_t>(0, 2 * n)(rng);
  for (std::size_t k = 0; k < extra; ++k) {
    const auto u = vertex(rng), v = vertex(rng);
    if (classes > 1 && cls[v] != (cls[u] + 1) % classes) continue;
    edges.emplace(u, v);
  }

  std::vector<propo::Edge> list;
  for (const auto& [u, v] : edges) list.push_back({u, v, 1, 0});
  return propo::QuantumBruhatGraph(plain_vertices(n), std::move(list), 1);
}

}  // namespace oracle
