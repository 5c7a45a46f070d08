#pragma once

#include <span>
#include <vector>

namespace mixflow {

/// Piecewise cubic Hermite interpolant with Fritsch-Carlson slopes. Preserves
/// monotonicity of the data and never overshoots between knots.
class MonotoneCubic {
 public:
  /// Knots must be strictly increasing (InvalidArgument otherwise).
  MonotoneCubic(std::vector<double> x, std::vector<double> f);

  /// Evaluates at t; values outside the knot range are clamped to the end values.
  double operator()(double t) const;
  std::vector<double> operator()(std::span<const double> t) const;

 private:
  std::vector<double> x_, f_, m_;
};

}  // namespace mixflow
