#include "propo/grading.hpp"

#include <algorithm>

namespace propo {

GradingReport validate_grading(const ChevalleyTable& table) {
  GradingReport report;
  const auto& basis = table.basis();
  const int r = table.fano_index();

  int top = 0;
  for (const auto& b : basis) top = std::max(top, b.degree);
  report.degree_histogram.assign(static_cast<std::size_t>(top) + 1, 0);
  for (const auto& b : basis) ++report.degree_histogram[static_cast<std::size_t>(b.degree)];

  for (std::size_t s = 0; s < table.size(); ++s) {
    for (const auto& term : table.row(s)) {
      const int shift = basis[s].degree + 1 - basis[term.target].degree;
      GradingViolation v{s, term.target, term.q_power, GradingFault::mismatch, std::nullopt};
      if (shift % r != 0) {
        v.fault = GradingFault::non_integral;
      } else if (shift < 0) {
        v.fault = GradingFault::negative;
      } else if (shift / r != term.q_power) {
        v.expected_q_power = shift / r;
      } else {
        continue;
      }
      report.violations.push_back(v);
    }
  }
  for (auto i : empty_rows(table))
    report.warnings.push_back("row '" + basis[i].name +
                              "' is empty; the graph cannot be strongly connected");
  report.ok = report.violations.empty();
  return report;
}

std::string describe(const GradingViolation& v, const ChevalleyTable& table) {
  const auto& b = table.basis();
  std::string out = b[v.source].name + " -> " + b[v.target].name + " (q" +
                    std::to_string(v.declared_q_power) + "): ";
  switch (v.fault) {
    case GradingFault::mismatch:
      return out + "expected q" + std::to_string(*v.expected_q_power);
    case GradingFault::non_integral:
      return out + "degree shift is not a multiple of the Fano index";
    case GradingFault::negative:
      return out + "would need a negative q-power";
  }
  return out;
}

bool is_palindrome(const std::vector<std::size_t>& histogram) {
  return std::equal(histogram.begin(), histogram.begin() + histogram.size() / 2,
                    histogram.rbegin());
}

}  // namespace propo
