#pragma once

#include <string>
#include <vector>

namespace equicoh {

// Rational Poincare/Hilbert series: numerator polynomial in t over the
// integers divided by a product of (1 - t^d) factors.
struct HilbertSeries {
  std::vector<long long> numerator;  // ascending t-coefficients
  std::vector<int> denominator;      // degrees d of the (1 - t^d) factors, sorted

  friend bool operator==(const HilbertSeries& a, const HilbertSeries& b) {
    return a.numerator == b.numerator && a.denominator == b.denominator;
  }
};

// Closed form for a complete intersection: variables of the given weights
// modulo a regular sequence of the given degrees,
//   prod (1 - t^rel) / prod (1 - t^weight),
// reduced by cancelling matching factors and dividing denominator factors
// into numerator factors when the degrees divide.
HilbertSeries hilbert_series_ci(const std::vector<int>& var_weights,
                                const std::vector<int>& rel_degrees);

// Coefficients 0..cutoff of the power-series expansion.
std::vector<long long> series_expand(const HilbertSeries& s, int cutoff);

// e.g. "(1 + t^2 + 2*t^4 + t^6)/((1 - t^2)^3)".
std::string render_series(const HilbertSeries& s);

}  // namespace equicoh
