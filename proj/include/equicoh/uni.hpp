#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "equicoh/errors.hpp"
#include "equicoh/matrix.hpp"
#include "equicoh/poly.hpp"
#include "equicoh/scalar.hpp"

namespace equicoh {

// Univariate rational polynomial, ascending coefficients; zero = empty vector.
using UniPoly = std::vector<Scalar>;

inline void uni_trim(UniPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline int uni_deg(const UniPoly& p) { return static_cast<int>(p.size()) - 1; }

inline UniPoly uni_add(const UniPoly& a, const UniPoly& b) {
  UniPoly out(std::max(a.size(), b.size()), Scalar(0));
  for (size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  uni_trim(out);
  return out;
}

inline UniPoly uni_scale(const UniPoly& a, const Scalar& c) {
  if (c == 0) return {};
  UniPoly out = a;
  for (auto& x : out) x *= c;
  return out;
}

inline UniPoly uni_sub(const UniPoly& a, const UniPoly& b) { return uni_add(a, uni_scale(b, -1)); }

inline UniPoly uni_mul(const UniPoly& a, const UniPoly& b) {
  if (a.empty() || b.empty()) return {};
  UniPoly out(a.size() + b.size() - 1, Scalar(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  uni_trim(out);
  return out;
}

inline UniPoly uni_derivative(const UniPoly& a) {
  if (a.size() <= 1) return {};
  UniPoly out(a.size() - 1);
  for (size_t i = 1; i < a.size(); ++i) out[i - 1] = a[i] * static_cast<int>(i);
  uni_trim(out);
  return out;
}

inline std::pair<UniPoly, UniPoly> uni_divrem(UniPoly a, const UniPoly& b) {
  if (b.empty()) throw Error("univariate division by zero");
  uni_trim(a);
  if (a.size() < b.size()) return {UniPoly{}, a};
  UniPoly q(a.size() - b.size() + 1, Scalar(0));
  const Scalar& lead = b.back();
  for (int k = static_cast<int>(a.size()) - static_cast<int>(b.size()); k >= 0; --k) {
    size_t top = k + b.size() - 1;
    if (a[top] == 0) continue;
    Scalar c = a[top] / lead;
    q[k] = c;
    for (size_t i = 0; i < b.size(); ++i) a[k + i] -= c * b[i];
  }
  uni_trim(a);
  return {q, a};
}

inline UniPoly uni_monic(UniPoly p) {
  uni_trim(p);
  if (p.empty()) return p;
  Scalar lead = p.back();
  for (auto& c : p) c /= lead;
  return p;
}

inline UniPoly uni_gcd(UniPoly a, UniPoly b) {
  uni_trim(a);
  uni_trim(b);
  while (!b.empty()) {
    UniPoly r = uni_divrem(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return uni_monic(a);
}

inline bool uni_is_squarefree(const UniPoly& p) {
  return uni_deg(uni_gcd(p, uni_derivative(p))) == 0;
}

inline UniPoly uni_squarefree_part(const UniPoly& p) {
  if (p.empty()) return p;
  UniPoly g = uni_gcd(p, uni_derivative(p));
  return uni_monic(uni_divrem(p, g).first);
}

inline Scalar uni_eval(const UniPoly& p, const Scalar& x) {
  Scalar out = 0;
  for (size_t i = p.size(); i-- > 0;) out = out * x + p[i];
  return out;
}

inline Matrix<Scalar> uni_eval_matrix(const UniPoly& p, const Matrix<Scalar>& m) {
  const int n = m.rows();
  Matrix<Scalar> out(n, n);
  Matrix<Scalar> id = Matrix<Scalar>::identity(n);
  for (size_t i = p.size(); i-- > 0;) {
    out = out * m;
    out = out + id.scaled(p[i]);
  }
  return out;
}

inline MultiPoly uni_to_multipoly(const UniPoly& p, const Ring& ring, int var) {
  MultiPoly out = MultiPoly::constant(ring, 0);
  MultiPoly x = MultiPoly::variable(ring, var);
  for (size_t i = p.size(); i-- > 0;) out = out * x + MultiPoly::constant(ring, p[i]);
  return out;
}

namespace detail {

inline std::vector<Int> positive_divisors(Int n, long long budget = 2'000'000) {
  if (n < 0) n = -n;
  std::vector<Int> divs;
  if (n == 0) return divs;
  Int d = 1;
  long long steps = 0;
  while (d * d <= n) {
    if (++steps > budget) throw ResourceError("divisor enumeration budget exceeded");
    if (n % d == 0) {
      divs.push_back(d);
      if (d * d != n) divs.push_back(n / d);
    }
    ++d;
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

}  // namespace detail

// All rational roots with multiplicities if the polynomial splits over the
// rationals; nullopt if an irreducible factor of degree > 1 remains.
inline std::optional<std::vector<std::pair<Scalar, int>>> rational_roots(UniPoly p) {
  uni_trim(p);
  if (p.empty()) throw Error("rational_roots of zero polynomial");
  std::vector<std::pair<Scalar, int>> roots;
  auto record = [&](const Scalar& r) {
    for (auto& [v, m] : roots)
      if (v == r) {
        ++m;
        return;
      }
    roots.emplace_back(r, 1);
  };
  while (uni_deg(p) > 0) {
    // Roots at zero.
    if (p[0] == 0) {
      record(0);
      p.erase(p.begin());
      continue;
    }
    // Scale to primitive integer coefficients.
    Int den_lcm = 1, num_gcd = 0;
    for (const auto& c : p) {
      den_lcm = int_lcm(den_lcm, scalar_den(c));
      num_gcd = int_gcd(num_gcd, scalar_num(c));
    }
    std::vector<Int> ic(p.size());
    for (size_t i = 0; i < p.size(); ++i) {
      Scalar v = p[i] * Scalar(den_lcm) / Scalar(num_gcd);
      ic[i] = scalar_num(v);
    }
    bool found = false;
    for (const Int& a : detail::positive_divisors(ic.front())) {
      for (const Int& b : detail::positive_divisors(ic.back())) {
        for (int sign : {1, -1}) {
          Scalar cand = Scalar(a * sign) / Scalar(b);
          if (uni_eval(p, cand) == 0) {
            record(cand);
            p = uni_divrem(p, UniPoly{-cand, 1}).first;
            found = true;
            break;
          }
        }
        if (found) break;
      }
      if (found) break;
    }
    if (!found) return std::nullopt;
  }
  std::sort(roots.begin(), roots.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  return roots;
}

}  // namespace equicoh
