#include "propo/property_o.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace propo {

bool SpectralRoute::holds() const noexcept {
  if (!delta0_simple) return false;
  for (const auto& p : circle)
    if (!p.matched) return false;
  return true;
}

std::size_t delta0_multiplicity(const CharPoly& poly, const Spectrum& spectrum, double tol) {
  const double delta0 = spectrum.delta0;
  std::size_t count = 0;
  for (const auto& z : spectrum.eigenvalues)
    if (std::abs(z - Complex(delta0, 0.0)) <= tol * delta0) ++count;
  if (count == 0) return 0;

  const auto slope = derivative(poly);
  double scale = 0.0;
  for (auto it = slope.coefficients.rbegin(); it != slope.coefficients.rend(); ++it)
    scale = scale * delta0 + std::abs(static_cast<double>(*it));
  const double value = std::abs(evaluate(slope, delta0));
  const bool simple_by_derivative = value > tol * scale;
  if (simple_by_derivative != (count == 1))
    throw MultiplicityError("root cluster at delta0 has " + std::to_string(count) +
                            " members but the derivative test says " +
                            (simple_by_derivative ? "simple" : "multiple"));
  return count;
}

std::vector<CirclePoint> classify_spectral_circle(const Spectrum& spectrum, int fano_index,
                                                  double tol) {
  const double delta0 = spectrum.delta0;
  const double r = fano_index;
  std::vector<CirclePoint> out;
  for (const auto& z : spectrum.eigenvalues) {
    if (std::abs(z) < delta0 * (1.0 - tol)) continue;
    const double turns = std::arg(z) * r / (2.0 * std::numbers::pi);
    int k = static_cast<int>(std::lround(turns)) % fano_index;
    if (k < 0) k += fano_index;
    const Complex target = std::polar(delta0, 2.0 * std::numbers::pi * k / r);
    const double distance = std::abs(z - target);
    out.push_back({z, k, distance, distance <= tol * delta0});
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const CirclePoint& a, const CirclePoint& b) { return a.k < b.k; });
  return out;
}

LemmaRoute lemma_route(const ChevalleyTable& table) {
  LemmaRoute route;
  route.nonnegative = check_nonnegative(build_c1hat(table));
  const auto graph = build_graph(table);
  const auto scc = strongly_connected(graph);
  route.strongly_connected = scc.strongly_connected;
  route.component_count = scc.component_count;
  if (scc.strongly_connected && !graph.edges().empty()) route.period = period(graph);
  route.r_cycle = find_cycle_of_length(graph, static_cast<std::size_t>(table.fano_index()));
  return route;
}

SpectralRoute spectral_route(const CharPoly& poly, const Spectrum& spectrum, int fano_index,
                             double tol) {
  SpectralRoute route;
  route.delta0 = spectrum.delta0;
  route.delta0_multiplicity = delta0_multiplicity(poly, spectrum, tol);
  route.delta0_simple = route.delta0_multiplicity == 1;
  route.circle = classify_spectral_circle(spectrum, fano_index, tol);
  return route;
}

PropertyOVerdict verify_property_o(const ChevalleyTable& table, double tol) {
  PropertyOVerdict verdict;
  verdict.fano_index = table.fano_index();
  verdict.lemma = lemma_route(table);
  verdict.char_poly = characteristic_polynomial(build_c1hat(table).entries);
  verdict.spectrum = roots(verdict.char_poly);
  verdict.spectral = spectral_route(verdict.char_poly, verdict.spectrum, table.fano_index(), tol);

  const bool by_lemma = verdict.lemma.holds();
  const bool by_spectrum = verdict.spectral.holds();
  verdict.holds = by_lemma && by_spectrum;
  if (by_lemma != by_spectrum)
    throw RouteDisagreement(std::string("lemma route says ") + (by_lemma ? "holds" : "fails") +
                                " but spectral route says " + (by_spectrum ? "holds" : "fails"),
                            std::move(verdict));
  return verdict;
}

}  // namespace propo
