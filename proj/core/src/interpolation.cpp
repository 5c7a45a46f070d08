#include "mixflow/interpolation.hpp"

#include <algorithm>
#include <cmath>

#include "mixflow/error.hpp"

namespace mixflow {
namespace {

// Three-point end slope, limited so the end segment stays monotone.
double end_slope(double h0, double h1, double d0, double d1) {
  double m = ((2.0 * h0 + h1) * d0 - h0 * d1) / (h0 + h1);
  if (m * d0 <= 0.0) return 0.0;
  if (d0 * d1 <= 0.0 && std::abs(m) > std::abs(3.0 * d0)) m = 3.0 * d0;
  return m;
}

}  // namespace

MonotoneCubic::MonotoneCubic(std::vector<double> x, std::vector<double> f)
    : x_(std::move(x)), f_(std::move(f)), m_(x_.size(), 0.0) {
  const std::size_t n = x_.size();
  if (n < 2 || f_.size() != n)
    throw Error(ErrorCode::InvalidArgument, "interpolant needs >= 2 knots and matching values");
  for (std::size_t k = 0; k + 1 < n; ++k)
    if (!(x_[k + 1] > x_[k])) throw Error(ErrorCode::InvalidArgument, "knots must increase strictly");

  std::vector<double> h(n - 1), delta(n - 1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    h[k] = x_[k + 1] - x_[k];
    delta[k] = (f_[k + 1] - f_[k]) / h[k];
  }
  if (n == 2) {
    m_[0] = m_[1] = delta[0];
    return;
  }
  for (std::size_t k = 1; k + 1 < n; ++k) {
    if (delta[k - 1] * delta[k] <= 0.0) {
      m_[k] = 0.0;
      continue;
    }
    const double w1 = 2.0 * h[k] + h[k - 1];
    const double w2 = h[k] + 2.0 * h[k - 1];
    m_[k] = (w1 + w2) / (w1 / delta[k - 1] + w2 / delta[k]);
  }
  m_[0] = end_slope(h[0], h[1], delta[0], delta[1]);
  m_[n - 1] = end_slope(h[n - 2], h[n - 3], delta[n - 2], delta[n - 3]);
}

double MonotoneCubic::operator()(double t) const {
  if (t <= x_.front()) return f_.front();
  if (t >= x_.back()) return f_.back();
  const auto it = std::upper_bound(x_.begin(), x_.end(), t);
  const std::size_t k = std::size_t(it - x_.begin()) - 1;
  const double h = x_[k + 1] - x_[k];
  const double s = (t - x_[k]) / h;
  const double s2 = s * s, s3 = s2 * s;
  return (2 * s3 - 3 * s2 + 1) * f_[k] + (s3 - 2 * s2 + s) * h * m_[k] +
         (-2 * s3 + 3 * s2) * f_[k + 1] + (s3 - s2) * h * m_[k + 1];
}

std::vector<double> MonotoneCubic::operator()(std::span<const double> t) const {
  std::vector<double> out(t.size());
  for (std::size_t k = 0; k < t.size(); ++k) out[k] = (*this)(t[k]);
  return out;
}

}  // namespace mixflow
