#include "equicoh/series.hpp"

#include <algorithm>

#include "equicoh/errors.hpp"

namespace equicoh {

namespace {

std::vector<long long> poly_mul_t(const std::vector<long long>& a, const std::vector<long long>& b) {
  std::vector<long long> out(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

}  // namespace

HilbertSeries hilbert_series_ci(const std::vector<int>& var_weights,
                                const std::vector<int>& rel_degrees) {
  for (int w : var_weights)
    if (w <= 0) throw Error("variable weight must be positive");
  for (int d : rel_degrees)
    if (d <= 0) throw Error("relation degree must be positive");
  std::vector<int> numer = rel_degrees;
  std::vector<int> denom = var_weights;
  std::sort(numer.begin(), numer.end());
  std::sort(denom.begin(), denom.end());

  // Cancel equal factors.
  {
    std::vector<int> n2, d2;
    size_t i = 0, j = 0;
    while (i < numer.size() && j < denom.size()) {
      if (numer[i] == denom[j]) {
        ++i, ++j;
      } else if (numer[i] < denom[j]) {
        n2.push_back(numer[i++]);
      } else {
        d2.push_back(denom[j++]);
      }
    }
    for (; i < numer.size(); ++i) n2.push_back(numer[i]);
    for (; j < denom.size(); ++j) d2.push_back(denom[j]);
    numer = std::move(n2);
    denom = std::move(d2);
  }

  // Divide denominator factors into numerator factors where possible:
  // (1 - t^e)/(1 - t^d) = 1 + t^d + ... + t^(e-d) when d | e.
  std::vector<long long> poly{1};
  std::vector<char> numer_used(numer.size(), 0);
  std::vector<int> denom_left;
  for (int d : denom) {
    bool matched = false;
    for (size_t k = 0; k < numer.size(); ++k) {
      if (numer_used[k] || numer[k] % d != 0) continue;
      numer_used[k] = 1;
      std::vector<long long> q(numer[k] - d + 1, 0);
      for (int p = 0; p <= numer[k] - d; p += d) q[p] = 1;
      poly = poly_mul_t(poly, q);
      matched = true;
      break;
    }
    if (!matched) denom_left.push_back(d);
  }
  for (size_t k = 0; k < numer.size(); ++k) {
    if (numer_used[k]) continue;
    std::vector<long long> f(numer[k] + 1, 0);
    f[0] = 1;
    f[numer[k]] = -1;
    poly = poly_mul_t(poly, f);
  }
  while (poly.size() > 1 && poly.back() == 0) poly.pop_back();
  HilbertSeries out;
  out.numerator = std::move(poly);
  out.denominator = std::move(denom_left);
  return out;
}

std::vector<long long> series_expand(const HilbertSeries& s, int cutoff) {
  std::vector<long long> coeff(cutoff + 1, 0);
  for (size_t i = 0; i < s.numerator.size() && i <= static_cast<size_t>(cutoff); ++i)
    coeff[i] = s.numerator[i];
  for (int d : s.denominator) {
    // Multiply by 1/(1 - t^d): running sums with stride d.
    for (int k = d; k <= cutoff; ++k) coeff[k] += coeff[k - d];
  }
  return coeff;
}

std::string render_series(const HilbertSeries& s) {
  std::string num;
  bool first = true;
  for (size_t i = 0; i < s.numerator.size(); ++i) {
    long long c = s.numerator[i];
    if (c == 0) continue;
    if (first) {
      if (c < 0) num += "-";
      first = false;
    } else {
      num += c < 0 ? " - " : " + ";
    }
    long long a = c < 0 ? -c : c;
    if (i == 0) {
      num += std::to_string(a);
    } else {
      if (a != 1) num += std::to_string(a) + "*";
      num += "t";
      if (i > 1) num += "^" + std::to_string(i);
    }
  }
  if (first) num = "0";
  if (s.denominator.empty()) return num;
  std::string den;
  for (size_t i = 0; i < s.denominator.size();) {
    size_t j = i;
    while (j < s.denominator.size() && s.denominator[j] == s.denominator[i]) ++j;
    if (!den.empty()) den += "*";
    std::string factor = "(1 - t";
    if (s.denominator[i] > 1) factor += "^" + std::to_string(s.denominator[i]);
    factor += ")";
    den += factor;
    if (j - i > 1) den += "^" + std::to_string(j - i);
    i = j;
  }
  bool num_atom = num.find(' ') == std::string::npos;
  std::string out = num_atom ? num : "(" + num + ")";
  out += "/";
  out += s.denominator.size() == 1 ? den : "(" + den + ")";
  return out;
}

}  // namespace equicoh
