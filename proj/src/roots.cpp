#include "propo/roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace propo {

double Spectrum::max_residual() const noexcept {
  double worst = 0.0;
  for (double r : residuals) worst = std::max(worst, r);
  return worst;
}

namespace {

struct Evaluation {
  Complex value;
  Complex slope;
  double magnitude_bound;  // sum |c_k| |z|^k, for the rounding-level test
};

Evaluation horner(const std::vector<double>& c, Complex z) {
  Complex p = c.back(), dp = 0.0;
  double bound = std::abs(c.back());
  const double az = std::abs(z);
  for (std::size_t k = c.size() - 1; k-- > 0;) {
    dp = dp * z + p;
    p = p * z + c[k];
    bound = bound * az + std::abs(c[k]);
  }
  return {p, dp, bound};
}

}  // namespace

std::vector<Complex> aberth_ehrlich(const std::vector<double>& monic, const RootOptions& options,
                                    std::size_t* iterations) {
  const std::size_t n = monic.size() - 1;
  if (iterations) *iterations = 0;
  if (n == 0) return {};
  if (n == 1) return {Complex(-monic[0], 0.0)};

  // Work in y = x / scale so the coefficients stay near unit size; the
  // starting circle 1 + max|c| is applied to the rescaled polynomial.
  double scale = 0.0;
  for (std::size_t k = 0; k < n; ++k)
    if (monic[k] != 0.0)
      scale = std::max(scale, std::pow(std::abs(monic[k]), 1.0 / static_cast<double>(n - k)));
  if (scale == 0.0) scale = 1.0;
  std::vector<double> c(n + 1);
  for (std::size_t k = 0; k <= n; ++k)
    c[k] = monic[k] / std::pow(scale, static_cast<double>(n - k));

  double radius = 0.0;
  for (std::size_t k = 0; k < n; ++k) radius = std::max(radius, std::abs(c[k]));
  radius += 1.0;

  std::vector<Complex> z(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(n) +
                         options.phase_offset;
    z[i] = std::polar(radius, angle);
  }
  const auto unscaled = [&] {
    std::vector<Complex> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = z[i] * scale;
    return out;
  };

  constexpr double eps = std::numeric_limits<double>::epsilon();
  std::vector<bool> done(n, false);
  for (std::size_t iter = 1; iter <= options.max_iterations; ++iter) {
    bool all_done = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i]) continue;
      const auto e = horner(c, z[i]);
      if (std::abs(e.value) <= 4.0 * eps * e.magnitude_bound) {
        done[i] = true;
        continue;
      }
      Complex correction;
      if (e.slope == Complex(0.0)) {
        correction = Complex(std::abs(z[i]) * 1e-8 + 1e-12, 0.0);
      } else {
        const Complex newton = e.value / e.slope;
        Complex repulsion = 0.0;
        for (std::size_t j = 0; j < n; ++j)
          if (j != i) repulsion += 1.0 / (z[i] - z[j]);
        correction = newton / (1.0 - newton * repulsion);
      }
      z[i] -= correction;
      if (scale * std::abs(correction) < options.step_tolerance * (1.0 + scale * std::abs(z[i])))
        done[i] = true;
      else
        all_done = false;
    }
    if (iterations) *iterations = iter;
    if (all_done) return unscaled();
  }
  throw RootFindingError("Aberth-Ehrlich iteration did not converge within " +
                             std::to_string(options.max_iterations) + " iterations",
                         Spectrum{unscaled(), 0.0, {}, options.max_iterations});
}

double relative_residual(const CharPoly& poly, Complex z) {
  double norm = 0.0;
  for (const auto& c : poly.coefficients) {
    const double d = static_cast<double>(c);
    norm += d * d;
  }
  return std::abs(evaluate(poly, z)) / std::sqrt(norm);
}

Spectrum roots(const CharPoly& poly, const RootOptions& options) {
  if (poly.degree() == 0) throw std::invalid_argument("roots: polynomial has degree 0");
  if (poly.coefficients.back() != 1) throw std::invalid_argument("roots: polynomial is not monic");

  std::size_t zeros = 0;
  while (zeros < poly.degree() && poly.coefficients[zeros] == 0) ++zeros;
  std::vector<double> deflated;
  deflated.reserve(poly.coefficients.size() - zeros);
  for (std::size_t k = zeros; k < poly.coefficients.size(); ++k)
    deflated.push_back(static_cast<double>(poly.coefficients[k]));

  const auto finish = [&](std::vector<Complex> found, std::size_t iterations) {
    Spectrum s;
    s.eigenvalues.assign(zeros, Complex(0.0));
    s.eigenvalues.insert(s.eigenvalues.end(), found.begin(), found.end());
    s.iterations = iterations;
    for (const auto& z : s.eigenvalues) {
      s.delta0 = std::max(s.delta0, std::abs(z));
      s.residuals.push_back(relative_residual(poly, z));
    }
    return s;
  };

  std::size_t iterations = 0;
  try {
    return finish(aberth_ehrlich(deflated, options, &iterations), iterations);
  } catch (const RootFindingError& e) {
    throw RootFindingError(e.what(), finish(e.partial().eigenvalues, options.max_iterations));
  }
}

}  // namespace propo
