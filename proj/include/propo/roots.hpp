#pragma once

#include "propo/charpoly.hpp"

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace propo {

using Complex = std::complex<double>;

struct Spectrum {
  std::vector<Complex> eigenvalues;  // with repetition, root-finder order
  double delta0 = 0.0;               // max |lambda|
  std::vector<double> residuals;     // |p(lambda)| / ||p||_2, per root
  std::size_t iterations = 0;

  double max_residual() const noexcept;
};

struct RootOptions {
  std::size_t max_iterations = 500;
  double step_tolerance = 1e-13;  // relative to 1 + |root|
  double phase_offset = 0.4;      // radians, for the initial circle
};

class RootFindingError : public std::runtime_error {
 public:
  RootFindingError(const std::string& what, Spectrum partial)
      : std::runtime_error(what), partial_(std::move(partial)) {}
  const Spectrum& partial() const noexcept { return partial_; }

 private:
  Spectrum partial_;
};

/// Aberth-Ehrlich on a monic double polynomial (ascending coefficients).
/// Updates are applied in place root by root (Gauss-Seidel). A root stops
/// moving once its step drops below step_tolerance * (1 + |z|) or its value
/// is at the rounding level of the Horner evaluation.
std::vector<Complex> aberth_ehrlich(const std::vector<double>& monic, const RootOptions& options,
                                    std::size_t* iterations = nullptr);

/// All complex roots of an exact monic polynomial. Exact zero roots are
/// split off before iterating.
Spectrum roots(const CharPoly& poly, const RootOptions& options = {});

/// |p(z)| / ||p||_2 with p converted to double.
double relative_residual(const CharPoly& poly, Complex z);

}  // namespace propo
