#pragma once

#include "propo/grading.hpp"
#include "propo/power_iteration.hpp"
#include "propo/property_o.hpp"
#include "propo/table.hpp"

#include <json.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace propo {

inline constexpr int report_schema_version = 1;
inline constexpr const char* tool_version = "0.1.0";

struct EigenvalueEntry {
  double re = 0.0;
  double im = 0.0;
  double modulus = 0.0;
  int nearest_k = 0;             // nearest delta0 * e^{2 pi i k / r}
  double circle_distance = 0.0;  // distance to that point
  bool on_circle = false;        // | |lambda| - delta0 | <= tol * delta0

  friend bool operator==(const EigenvalueEntry&, const EigenvalueEntry&) = default;
};

struct CircleEntry {
  double re = 0.0;
  double im = 0.0;
  int k = 0;
  double distance = 0.0;
  bool matched = false;

  friend bool operator==(const CircleEntry&, const CircleEntry&) = default;
};

/// Everything one verification run produces. Re-running on the same input
/// yields an identical report apart from `timings_ms`.
struct VerificationReport {
  int schema_version = report_schema_version;
  std::string version = tool_version;
  std::string dataset;
  double tolerance = default_tolerance;

  // table
  std::size_t dimension = 0;
  int fano_index = 0;
  int c1_multiple = 0;
  std::vector<std::size_t> degree_histogram;
  bool grading_ok = false;
  std::vector<std::string> grading_violations;
  std::vector<std::string> warnings;

  // lemma route
  bool nonnegative = false;
  bool strongly_connected = false;
  std::size_t component_count = 0;
  std::optional<std::vector<std::string>> r_cycle;
  bool r_cycle_simple = false;
  std::optional<int> period;
  bool lemma_holds = false;

  // spectral route
  double delta0 = 0.0;
  std::size_t delta0_multiplicity = 0;
  bool delta0_simple = false;
  std::vector<std::string> char_poly;  // ascending, decimal
  std::vector<EigenvalueEntry> eigenvalues;
  double max_residual = 0.0;
  std::vector<CircleEntry> circle;
  bool spectral_holds = false;
  std::optional<double> perron_value;
  std::optional<std::vector<double>> perron_vector;

  bool holds = false;
  std::optional<std::string> error;
  std::map<std::string, double> timings_ms;

  /// Equality ignoring timings.
  bool same_content(const VerificationReport& other) const;
};

void to_json(nlohmann::json& j, const VerificationReport& r);
/// Strict: throws nlohmann::json::exception on a missing or mistyped field
/// and std::runtime_error on an unknown schema_version.
void from_json(const nlohmann::json& j, VerificationReport& r);

std::vector<EigenvalueEntry> eigenvalue_table(const Spectrum& spectrum, int fano_index, double tol);

std::string format_text(const VerificationReport& report);

struct VerifyOptions {
  double tolerance = default_tolerance;
  std::optional<int> fano_index_override;
};

/// Exit-code contract of the command-line tool.
enum class ExitCode : int {
  holds = 0,
  fails = 1,
  invalid_input = 2,
  inconsistent = 3,  // route disagreement or numerical failure
};

struct VerificationOutcome {
  VerificationReport report;
  ExitCode exit_code = ExitCode::holds;
};

/// Load (path or bundled:NAME), validate, verify and report. Never throws for
/// input or numerical problems; those become the exit code and `error`.
VerificationOutcome run_verification(const std::string& source, const VerifyOptions& options = {});

}  // namespace propo
