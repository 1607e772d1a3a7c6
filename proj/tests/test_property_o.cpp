#include "propo/datasets.hpp"
#include "propo/property_o.hpp"

#include <doctest.h>

#include <numbers>

using namespace propo;

namespace {

CharPoly poly(std::initializer_list<long long> ascending) {
  CharPoly p;
  for (auto c : ascending) p.coefficients.emplace_back(c);
  return p;
}

/// Graph with a 4-cycle and a 6-cycle through `one`: period 2 and no closed
/// walk of length 2, so the lemma cannot fire although the spectrum is fine.
ChevalleyTable period_two_without_two_cycle() {
  std::vector<BasisElement> basis{{"one", 0}, {"h", 1}, {"x2", 2}, {"x3", 3}, {"y1", 2},
                                  {"y2", 3},  {"y3", 4}, {"y4", 5}, {"y5", 6}};
  std::vector<std::vector<QTerm>> rows(basis.size());
  rows[0] = {{1, 0, 1}, {1, 0, 4}};
  rows[1] = {{1, 0, 2}};
  rows[2] = {{1, 0, 3}};
  rows[3] = {{1, 2, 0}};
  rows[4] = {{1, 0, 5}};
  rows[5] = {{1, 0, 6}};
  rows[6] = {{1, 0, 7}};
  rows[7] = {{1, 0, 8}};
  rows[8] = {{1, 3, 0}};
  return ChevalleyTable("control", basis, 2, 1, rows);
}

}  // namespace

TEST_SUITE_BEGIN("property_o");

TEST_CASE("delta0_multiplicity") {
  const auto simple = poly({-4, 0, 1});
  CHECK(delta0_multiplicity(simple, roots(simple), 1e-9) == 1);

  const auto doubled = poly({4, 0, -3, 1});  // (x-2)^2 (x+1)
  CHECK(delta0_multiplicity(doubled, roots(doubled), 1e-6) == 2);

  const auto case5 = characteristic_polynomial(build_c1hat(load_input("bundled:case5")).entries);
  CHECK(delta0_multiplicity(case5, roots(case5), 1e-9) == 1);
}

TEST_CASE("delta0_multiplicity refuses inconsistent evidence") {
  const auto p = poly({-4, 0, 1});
  Spectrum fake{{2.0, 2.0 + 1e-12}, 2.0 + 1e-12, {0.0, 0.0}, 0};
  CHECK_THROWS_AS(delta0_multiplicity(p, fake, 1e-9), MultiplicityError);
}

TEST_CASE("spectral circle classification") {
  Spectrum s;
  s.delta0 = 2.0;
  s.eigenvalues = {2.0, std::polar(2.0, 2 * std::numbers::pi / 3), -2.0, 0.5};
  const auto circle = classify_spectral_circle(s, 3, 1e-9);
  REQUIRE(circle.size() == 3);
  CHECK(circle[0].k == 0);
  CHECK(circle[0].matched);
  CHECK(circle[1].k == 1);
  CHECK(circle[1].matched);
  CHECK_FALSE(circle[2].matched);
  CHECK(circle[2].distance == doctest::Approx(2.0));
}

TEST_CASE("bundled horospherical cases hold by both routes") {
  for (const auto& [name, r] : std::vector<std::pair<std::string, int>>{
           {"case1_n3", 5}, {"case2", 7}, {"case5", 4}}) {
    CAPTURE(name);
    const auto v = verify_property_o(load_input("bundled:" + name));
    CHECK(v.holds);
    CHECK(v.fano_index == r);
    CHECK(v.lemma.holds());
    CHECK(v.lemma.nonnegative);
    CHECK(v.lemma.strongly_connected);
    REQUIRE(v.lemma.r_cycle);
    CHECK(v.lemma.r_cycle->length() == static_cast<std::size_t>(r));
    REQUIRE(v.lemma.period);
    CHECK(v.lemma.period->equals_fano_index);
    CHECK(v.spectral.holds());
    CHECK(v.spectral.delta0_simple);
    CHECK(v.spectral.circle.size() == static_cast<std::size_t>(r));
  }
}

TEST_CASE("projective spaces hold") {
  for (int n = 1; n <= 5; ++n) {
    CAPTURE(n);
    const auto v = verify_property_o(load_input("bundled:p" + std::to_string(n)));
    CHECK(v.holds);
    CHECK(v.spectral.delta0 == doctest::Approx(n + 1.0).epsilon(1e-12));
  }
}

TEST_CASE("P1 with Fano index 3 is a negative control") {
  const auto v = verify_property_o(load_input("bundled:p1").with_fano_index(3));
  CHECK_FALSE(v.holds);
  CHECK_FALSE(v.spectral.holds());
  CHECK_FALSE(v.lemma.holds());
  CHECK_FALSE(v.lemma.r_cycle);
  CHECK(v.spectral.delta0_simple);
  bool unmatched = false;
  for (const auto& c : v.spectral.circle) unmatched |= !c.matched;
  CHECK(unmatched);
}

TEST_CASE("route disagreement is an error") {
  const auto table = period_two_without_two_cycle();
  try {
    verify_property_o(table);
    FAIL("expected RouteDisagreement");
  } catch (const RouteDisagreement& e) {
    CHECK_FALSE(e.verdict().lemma.holds());
    CHECK(e.verdict().spectral.holds());
    CHECK_FALSE(e.verdict().holds);
    REQUIRE(e.verdict().lemma.period);
    CHECK(e.verdict().lemma.period->period == 2);
  }
}

TEST_CASE("reducible operator fails both routes") {
  // one -> h -> one plus a sink-free tail that never returns: x only receives.
  std::vector<BasisElement> basis{{"one", 0}, {"h", 1}, {"x", 2}};
  std::vector<std::vector<QTerm>> rows{{{1, 0, 1}}, {{1, 1, 0}, {1, 0, 2}}, {{1, 0, 2}}};
  const ChevalleyTable t("tail", basis, 2, 2, rows);
  // x has a self-loop with eigenvalue 2 = delta0 and the cycle one-h also has
  // spectral radius 2, so delta0 is double.
  const auto v = verify_property_o(t, 1e-6);
  CHECK_FALSE(v.holds);
  CHECK_FALSE(v.lemma.strongly_connected);
  CHECK(v.spectral.delta0_multiplicity == 2);
}

TEST_SUITE_END();
