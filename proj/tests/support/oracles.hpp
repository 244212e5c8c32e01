#pragma once

// Test-only reference computations. Everything here is written from the
// closed-form descriptions of the surfaces and never calls into the library's
// Gram matrices, so it can serve as an independent check.

#include <algorithm>
#include <cstdint>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using Int = std::int64_t;
using Coeffs = std::vector<Int>;

// Pairing on F_n blown up at r points, basis (C_n, F, E_1..E_r), by expanding
// C_n^2 = -n, C_n.F = 1, F^2 = 0, E_i^2 = -1 term by term.
inline Int pairing_hirzebruch(Int n, const Coeffs& x, const Coeffs& y) {
  Int v = -n * x[0] * y[0] + x[0] * y[1] + x[1] * y[0];
  for (std::size_t i = 2; i < x.size(); ++i) v -= x[i] * y[i];
  return v;
}

// Pairing on P^2 blown up at r points, basis (H, E_1..E_r).
inline Int pairing_p2(const Coeffs& x, const Coeffs& y) {
  Int v = x[0] * y[0];
  for (std::size_t i = 1; i < x.size(); ++i) v -= x[i] * y[i];
  return v;
}

inline Coeffs canonical_hirzebruch(Int n, Int r) {
  Coeffs k = {-2, -(n + 2)};
  for (Int i = 0; i < r; ++i) k.push_back(1);
  return k;
}

inline Coeffs canonical_p2(Int r) {
  Coeffs k = {-3};
  for (Int i = 0; i < r; ++i) k.push_back(1);
  return k;
}

// All (d, -m_1, .., -m_r) with 0 <= d <= bound, |m_i| <= bound, C^2 = s and
// p_a = 0, by walking the whole box. Sorted lexicographically.
inline std::vector<Coeffs> brute_force_rational_classes(Int r, Int s, Int bound) {
  std::vector<Coeffs> out;
  const Coeffs k = canonical_p2(r);
  Coeffs c(static_cast<std::size_t>(r + 1), 0);
  for (Int d = 0; d <= bound; ++d) {
    c[0] = d;
    for (std::size_t i = 1; i < c.size(); ++i) c[i] = -bound;
    while (true) {
      const Int sq = pairing_p2(c, c);
      const Int kc = pairing_p2(k, c);
      if (sq == s && (sq + kc) % 2 == 0 && 1 + (sq + kc) / 2 == 0) out.push_back(c);
      std::size_t pos = 1;
      while (pos < c.size() && c[pos] == bound) c[pos++] = -bound;
      if (pos == c.size()) break;
      ++c[pos];
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Every j in [1, a] with (a - j) n <= b <= (a - j + 1) n - 1.
inline std::vector<Int> bracketing_js(Int n, Int a, Int b) {
  std::vector<Int> js;
  for (Int j = 1; j <= a; ++j) {
    if ((a - j) * n <= b && b <= (a - j + 1) * n - 1) js.push_back(j);
  }
  return js;
}

// Sums of at most `copies` generators g1, g2 (as (a, b) pairs).
inline std::set<std::pair<Int, Int>> generated_monoid(std::pair<Int, Int> g1,
                                                      std::pair<Int, Int> g2, Int copies) {
  std::set<std::pair<Int, Int>> out;
  for (Int i = 0; i <= copies; ++i) {
    for (Int k = 0; i + k <= copies; ++k) {
      out.insert({i * g1.first + k * g2.first, i * g1.second + k * g2.second});
    }
  }
  return out;
}

}  // namespace oracle
