#include "propo/report.hpp"

#include "propo/datasets.hpp"

#include <chrono>
#include <cmath>
#include <iomanip>
#include <numbers>
#include <sstream>

namespace propo {

using nlohmann::json;

bool VerificationReport::same_content(const VerificationReport& o) const {
  auto strip = [](VerificationReport r) {
    r.timings_ms.clear();
    return r;
  };
  json a = strip(*this), b = strip(o);
  return a == b;
}

void to_json(json& j, const VerificationReport& r) {
  json eigen = json::array();
  for (const auto& e : r.eigenvalues)
    eigen.push_back({{"re", e.re},
                     {"im", e.im},
                     {"modulus", e.modulus},
                     {"nearest_k", e.nearest_k},
                     {"circle_distance", e.circle_distance},
                     {"on_circle", e.on_circle}});
  json circle = json::array();
  for (const auto& c : r.circle)
    circle.push_back(
        {{"re", c.re}, {"im", c.im}, {"k", c.k}, {"distance", c.distance}, {"matched", c.matched}});

  j = json{
      {"schema_version", r.schema_version},
      {"tool_version", r.version},
      {"dataset", r.dataset},
      {"tolerance", r.tolerance},
      {"table",
       {{"dimension", r.dimension},
        {"fano_index", r.fano_index},
        {"c1_multiple", r.c1_multiple},
        {"degree_histogram", r.degree_histogram},
        {"grading_ok", r.grading_ok},
        {"grading_violations", r.grading_violations},
        {"warnings", r.warnings}}},
      {"lemma_route",
       {{"nonnegative", r.nonnegative},
        {"strongly_connected", r.strongly_connected},
        {"component_count", r.component_count},
        {"r_cycle", r.r_cycle ? json(*r.r_cycle) : json(nullptr)},
        {"r_cycle_simple", r.r_cycle_simple},
        {"period", r.period ? json(*r.period) : json(nullptr)},
        {"holds", r.lemma_holds}}},
      {"spectral_route",
       {{"delta0", r.delta0},
        {"delta0_multiplicity", r.delta0_multiplicity},
        {"delta0_simple", r.delta0_simple},
        {"char_poly", r.char_poly},
        {"eigenvalues", eigen},
        {"max_residual", r.max_residual},
        {"circle", circle},
        {"perron_value", r.perron_value ? json(*r.perron_value) : json(nullptr)},
        {"perron_vector", r.perron_vector ? json(*r.perron_vector) : json(nullptr)},
        {"holds", r.spectral_holds}}},
      {"verdict", {{"holds", r.holds}, {"error", r.error ? json(*r.error) : json(nullptr)}}},
      {"timings_ms", r.timings_ms},
  };
}

namespace {
template <typename T>
std::optional<T> optional_field(const json& j, const char* key) {
  const auto& v = j.at(key);
  if (v.is_null()) return std::nullopt;
  return v.get<T>();
}
}  // namespace

void from_json(const json& j, VerificationReport& r) {
  r.schema_version = j.at("schema_version").get<int>();
  if (r.schema_version != report_schema_version)
    throw std::runtime_error("unsupported report schema_version " +
                             std::to_string(r.schema_version));
  r.version = j.at("tool_version").get<std::string>();
  r.dataset = j.at("dataset").get<std::string>();
  r.tolerance = j.at("tolerance").get<double>();

  const auto& t = j.at("table");
  r.dimension = t.at("dimension").get<std::size_t>();
  r.fano_index = t.at("fano_index").get<int>();
  r.c1_multiple = t.at("c1_multiple").get<int>();
  r.degree_histogram = t.at("degree_histogram").get<std::vector<std::size_t>>();
  r.grading_ok = t.at("grading_ok").get<bool>();
  r.grading_violations = t.at("grading_violations").get<std::vector<std::string>>();
  r.warnings = t.at("warnings").get<std::vector<std::string>>();

  const auto& l = j.at("lemma_route");
  r.nonnegative = l.at("nonnegative").get<bool>();
  r.strongly_connected = l.at("strongly_connected").get<bool>();
  r.component_count = l.at("component_count").get<std::size_t>();
  r.r_cycle = optional_field<std::vector<std::string>>(l, "r_cycle");
  r.r_cycle_simple = l.at("r_cycle_simple").get<bool>();
  r.period = optional_field<int>(l, "period");
  r.lemma_holds = l.at("holds").get<bool>();

  const auto& s = j.at("spectral_route");
  r.delta0 = s.at("delta0").get<double>();
  r.delta0_multiplicity = s.at("delta0_multiplicity").get<std::size_t>();
  r.delta0_simple = s.at("delta0_simple").get<bool>();
  r.char_poly = s.at("char_poly").get<std::vector<std::string>>();
  r.eigenvalues.clear();
  for (const auto& e : s.at("eigenvalues"))
    r.eigenvalues.push_back({e.at("re").get<double>(), e.at("im").get<double>(),
                             e.at("modulus").get<double>(), e.at("nearest_k").get<int>(),
                             e.at("circle_distance").get<double>(), e.at("on_circle").get<bool>()});
  r.max_residual = s.at("max_residual").get<double>();
  r.circle.clear();
  for (const auto& c : s.at("circle"))
    r.circle.push_back({c.at("re").get<double>(), c.at("im").get<double>(), c.at("k").get<int>(),
                        c.at("distance").get<double>(), c.at("matched").get<bool>()});
  r.perron_value = optional_field<double>(s, "perron_value");
  r.perron_vector = optional_field<std::vector<double>>(s, "perron_vector");
  r.spectral_holds = s.at("holds").get<bool>();

  const auto& v = j.at("verdict");
  r.holds = v.at("holds").get<bool>();
  r.error = optional_field<std::string>(v, "error");
  r.timings_ms = j.at("timings_ms").get<std::map<std::string, double>>();
}

std::vector<EigenvalueEntry> eigenvalue_table(const Spectrum& spectrum, int fano_index, double tol) {
  std::vector<EigenvalueEntry> out;
  const double delta0 = spectrum.delta0;
  for (const auto& z : spectrum.eigenvalues) {
    EigenvalueEntry e;
    e.re = z.real();
    e.im = z.imag();
    e.modulus = std::abs(z);
    int k = static_cast<int>(std::lround(std::arg(z) * fano_index / (2.0 * std::numbers::pi))) %
            fano_index;
    if (k < 0) k += fano_index;
    e.nearest_k = k;
    e.circle_distance = std::abs(z - std::polar(delta0, 2.0 * std::numbers::pi * k / fano_index));
    e.on_circle = std::abs(e.modulus - delta0) <= tol * delta0;
    out.push_back(e);
  }
  return out;
}

std::string format_text(const VerificationReport& r) {
  std::ostringstream out;
  out << std::setprecision(12);
  out << "dataset        " << r.dataset << '\n'
      << "dimension      " << r.dimension << "   fano index " << r.fano_index << "   c1 = "
      << r.c1_multiple << "h\n"
      << "degrees        (";
  for (std::size_t i = 0; i < r.degree_histogram.size(); ++i)
    out << (i ? "," : "") << r.degree_histogram[i];
  out << ")  grading " << (r.grading_ok ? "ok" : "VIOLATED") << '\n';
  for (const auto& v : r.grading_violations) out << "  violation: " << v << '\n';
  for (const auto& w : r.warnings) out << "  warning: " << w << '\n';

  out << "lemma route\n"
      << "  nonnegative         " << (r.nonnegative ? "yes" : "no") << '\n'
      << "  strongly connected  " << (r.strongly_connected ? "yes" : "no") << " ("
      << r.component_count << " component" << (r.component_count == 1 ? "" : "s") << ")\n"
      << "  period              " << (r.period ? std::to_string(*r.period) : "-") << '\n'
      << "  r-cycle             ";
  if (r.r_cycle) {
    for (std::size_t i = 0; i < r.r_cycle->size(); ++i) out << (i ? " " : "") << (*r.r_cycle)[i];
    if (!r.r_cycle_simple) out << "  (closed walk)";
  } else {
    out << "none";
  }
  out << "\n  holds               " << (r.lemma_holds ? "yes" : "no") << '\n';

  out << "spectral route\n"
      << "  delta0              " << r.delta0 << '\n'
      << "  multiplicity        " << r.delta0_multiplicity << '\n';
  if (r.perron_value) out << "  perron (power it.)  " << *r.perron_value << '\n';
  out << "  spectral circle     " << r.circle.size() << " eigenvalue"
      << (r.circle.size() == 1 ? "" : "s") << '\n';
  for (const auto& c : r.circle)
    out << "    " << c.re << (c.im < 0 ? " - " : " + ") << std::abs(c.im) << "i   k=" << c.k
        << "  dist=" << std::setprecision(3) << c.distance << std::setprecision(12)
        << (c.matched ? "" : "  UNMATCHED") << '\n';
  out << "  max residual        " << std::setprecision(3) << r.max_residual
      << std::setprecision(12) << '\n'
      << "  holds               " << (r.spectral_holds ? "yes" : "no") << '\n';
  out << "verdict        Property O " << (r.holds ? "HOLDS" : "NOT ESTABLISHED") << '\n';
  if (r.error) out << "error          " << *r.error << '\n';
  return out.str();
}

namespace {

using Clock = std::chrono::steady_clock;
double elapsed_ms(Clock::time_point since) {
  return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
}

void fill_table_fields(VerificationReport& r, const ChevalleyTable& table,
                       const GradingReport& grading) {
  r.dimension = table.size();
  r.fano_index = table.fano_index();
  r.c1_multiple = table.anticanonical_multiple();
  r.degree_histogram = grading.degree_histogram;
  r.grading_ok = grading.ok;
  for (const auto& v : grading.violations) r.grading_violations.push_back(describe(v, table));
  r.warnings = grading.warnings;
}

void fill_verdict_fields(VerificationReport& r, const ChevalleyTable& table,
                         const PropertyOVerdict& v, double tol) {
  r.nonnegative = v.lemma.nonnegative;
  r.strongly_connected = v.lemma.strongly_connected;
  r.component_count = v.lemma.component_count;
  if (v.lemma.r_cycle) {
    std::vector<std::string> names;
    for (auto i : v.lemma.r_cycle->vertices) names.push_back(table.basis()[i].name);
    r.r_cycle = std::move(names);
    r.r_cycle_simple = v.lemma.r_cycle->simple;
  }
  if (v.lemma.period) r.period = v.lemma.period->period;
  r.lemma_holds = v.lemma.holds();

  r.delta0 = v.spectral.delta0;
  r.delta0_multiplicity = v.spectral.delta0_multiplicity;
  r.delta0_simple = v.spectral.delta0_simple;
  for (const auto& c : v.char_poly.coefficients) r.char_poly.push_back(c.str());
  r.eigenvalues = eigenvalue_table(v.spectrum, v.fano_index, tol);
  r.max_residual = v.spectrum.max_residual();
  for (const auto& c : v.spectral.circle)
    r.circle.push_back({c.eigenvalue.real(), c.eigenvalue.imag(), c.k, c.distance, c.matched});
  r.spectral_holds = v.spectral.holds();
  r.holds = v.holds;
}

}  // namespace

VerificationOutcome run_verification(const std::string& source, const VerifyOptions& options) {
  VerificationOutcome outcome;
  auto& r = outcome.report;
  r.dataset = source;
  r.tolerance = options.tolerance;
  const auto start = Clock::now();

  std::optional<ChevalleyTable> loaded;
  try {
    loaded = load_input(source);
  } catch (const TableError& e) {
    r.error = e.what();
    outcome.exit_code = ExitCode::invalid_input;
    return outcome;
  }
  r.timings_ms["parse"] = elapsed_ms(start);

  ChevalleyTable table = options.fano_index_override
                             ? loaded->with_fano_index(*options.fano_index_override)
                             : *loaded;
  const auto grading = validate_grading(table);
  fill_table_fields(r, table, grading);
  // An overridden Fano index is a testing aid and normally breaks the
  // grading; the routes still run so the override can act as a control.
  if (!grading.ok && !options.fano_index_override) {
    r.error = "grading violated: " + describe(grading.violations.front(), table);
    outcome.exit_code = ExitCode::invalid_input;
    return outcome;
  }

  const auto verify_start = Clock::now();
  try {
    const auto verdict = verify_property_o(table, options.tolerance);
    fill_verdict_fields(r, table, verdict, options.tolerance);
  } catch (const RouteDisagreement& e) {
    fill_verdict_fields(r, table, e.verdict(), options.tolerance);
    r.holds = false;
    r.error = e.what();
    outcome.exit_code = ExitCode::inconsistent;
  } catch (const RootFindingError& e) {
    r.error = e.what();
    outcome.exit_code = ExitCode::inconsistent;
  } catch (const MultiplicityError& e) {
    r.error = e.what();
    outcome.exit_code = ExitCode::inconsistent;
  }
  r.timings_ms["verify"] = elapsed_ms(verify_start);

  const auto matrix = build_c1hat(table);
  if (check_nonnegative(matrix) && is_irreducible(matrix.entries)) {
    const auto perron_start = Clock::now();
    const auto perron = power_iteration(matrix);
    r.perron_value = perron.value;
    r.perron_vector = std::vector<double>(perron.vector.begin(), perron.vector.end());
    r.timings_ms["power_iteration"] = elapsed_ms(perron_start);
  }
  r.timings_ms["total"] = elapsed_ms(start);

  if (outcome.exit_code == ExitCode::holds && !r.holds) outcome.exit_code = ExitCode::fails;
  return outcome;
}

}  // namespace propo
