#pragma once

#include "propo/charpoly.hpp"
#include "propo/graph.hpp"
#include "propo/operator.hpp"
#include "propo/roots.hpp"
#include "propo/table.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace propo {

constexpr double default_tolerance = 1e-9;

/// Graph-theoretic sufficient criterion: nonnegative c1^, strongly
/// connected quantum Bruhat graph, and a cycle whose length is the Fano index.
struct LemmaRoute {
  bool nonnegative = false;
  bool strongly_connected = false;
  std::size_t component_count = 0;
  std::optional<Cycle> r_cycle;
  std::optional<PeriodResult> period;  // absent unless strongly connected with edges

  bool holds() const noexcept { return nonnegative && strongly_connected && r_cycle.has_value(); }
};

/// One eigenvalue on the spectral circle and the nearest delta0 * e^{2 pi i k / r}.
struct CirclePoint {
  Complex eigenvalue;
  int k = 0;
  double distance = 0.0;
  bool matched = false;  // distance <= tol * delta0
};

struct SpectralRoute {
  double delta0 = 0.0;
  std::size_t delta0_multiplicity = 0;
  bool delta0_simple = false;
  std::vector<CirclePoint> circle;

  bool holds() const noexcept;
};

struct PropertyOVerdict {
  int fano_index = 0;
  LemmaRoute lemma;
  SpectralRoute spectral;
  CharPoly char_poly;
  Spectrum spectrum;
  bool holds = false;
};

class MultiplicityError : public std::runtime_error {
 public:
  explicit MultiplicityError(const std::string& what) : std::runtime_error(what) {}
};

class RouteDisagreement : public std::runtime_error {
 public:
  RouteDisagreement(const std::string& what, PropertyOVerdict verdict)
      : std::runtime_error(what), verdict_(std::move(verdict)) {}
  const PropertyOVerdict& verdict() const noexcept { return verdict_; }

 private:
  PropertyOVerdict verdict_;
};

/// Number of roots within tol * delta0 of delta0. When at least one root is
/// found, |p'(delta0)| > tol * sum_k |p'_k| delta0^k must agree with the
/// count being exactly one; otherwise MultiplicityError.
std::size_t delta0_multiplicity(const CharPoly& poly, const Spectrum& spectrum, double tol);

/// Classifies every eigenvalue with |lambda| >= delta0 (1 - tol).
std::vector<CirclePoint> classify_spectral_circle(const Spectrum& spectrum, int fano_index,
                                                  double tol);

LemmaRoute lemma_route(const ChevalleyTable& table);
SpectralRoute spectral_route(const CharPoly& poly, const Spectrum& spectrum, int fano_index,
                             double tol);

/// Runs both routes. Throws RouteDisagreement if they differ and propagates
/// RootFindingError / MultiplicityError.
PropertyOVerdict verify_property_o(const ChevalleyTable& table, double tol = default_tolerance);

}  // namespace propo
