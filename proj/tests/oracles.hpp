#pragma once

// Reference computations used only by tests. Each one takes a different
// route from the library code it checks.

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "fermat5/polyq.hpp"
#include "fermat5/rational.hpp"

namespace oracle {

using fermat5::PolyQ;
using fermat5::Rational;

// Determinant by Gaussian elimination over Q with row swaps.
inline Rational determinant(std::vector<std::vector<Rational>> m) {
  const size_t n = m.size();
  Rational det = 1;
  for (size_t k = 0; k < n; ++k) {
    size_t piv = k;
    while (piv < n && m[piv][k].is_zero()) ++piv;
    if (piv == n) return 0;
    if (piv != k) {
      std::swap(m[piv], m[k]);
      det = -det;
    }
    det *= m[k][k];
    for (size_t i = k + 1; i < n; ++i) {
      Rational factor = m[i][k] / m[k][k];
      if (factor.is_zero()) continue;
      for (size_t j = k; j < n; ++j) m[i][j] -= factor * m[k][j];
    }
  }
  return det;
}

// Sylvester determinant of a (degree m) and b (degree n), both nonzero.
inline Rational sylvester_resultant(const PolyQ& a, const PolyQ& b) {
  const int m = a.degree(), n = b.degree();
  const size_t size = static_cast<size_t>(m + n);
  if (size == 0) return 1;
  std::vector<std::vector<Rational>> mat(size, std::vector<Rational>(size));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= m; ++j) mat[static_cast<size_t>(i)][static_cast<size_t>(i + j)] = a.coeff(m - j);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j <= n; ++j) mat[static_cast<size_t>(n + i)][static_cast<size_t>(i + j)] = b.coeff(n - j);
  return determinant(mat);
}

inline std::map<std::uint64_t, unsigned> trial_division(std::uint64_t n) {
  std::map<std::uint64_t, unsigned> out;
  for (std::uint64_t p = 2; p * p <= n; ++p)
    while (n % p == 0) {
      ++out[p];
      n /= p;
    }
  if (n > 1) ++out[n];
  return out;
}

inline std::uint64_t squarefree_part(std::uint64_t n) {
  std::uint64_t k = 1;
  for (auto [p, e] : trial_division(n))
    if (e % 2) k *= p;
  return k;
}

// ---- naive arithmetic mod a small prime ----

using Coeffs = std::vector<std::int64_t>;  // lowest first, residues in [0, p)

inline void trim(Coeffs& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

inline std::int64_t inverse_by_search(std::int64_t a, std::int64_t p) {
  for (std::int64_t x = 1; x < p; ++x)
    if (a * x % p == 1) return x;
  return 0;
}

// f mod divisor (divisor monic); returns the remainder.
inline Coeffs remainder(Coeffs f, const Coeffs& d, std::int64_t p) {
  const int dd = static_cast<int>(d.size()) - 1;
  trim(f);
  while (static_cast<int>(f.size()) - 1 >= dd) {
    std::int64_t lead = f.back();
    int shift = static_cast<int>(f.size()) - 1 - dd;
    for (int j = 0; j <= dd; ++j) {
      auto& slot = f[static_cast<size_t>(shift + j)];
      slot = ((slot - lead * d[static_cast<size_t>(j)]) % p + p) % p;
    }
    trim(f);
    if (f.empty()) break;
  }
  return f;
}

inline Coeffs quotient(Coeffs f, const Coeffs& d, std::int64_t p) {
  const int dd = static_cast<int>(d.size()) - 1;
  trim(f);
  Coeffs q(f.size() >= d.size() ? f.size() - d.size() + 1 : 0, 0);
  while (!f.empty() && static_cast<int>(f.size()) - 1 >= dd) {
    std::int64_t lead = f.back();
    int shift = static_cast<int>(f.size()) - 1 - dd;
    q[static_cast<size_t>(shift)] = lead;
    for (int j = 0; j <= dd; ++j) {
      auto& slot = f[static_cast<size_t>(shift + j)];
      slot = ((slot - lead * d[static_cast<size_t>(j)]) % p + p) % p;
    }
    trim(f);
  }
  return q;
}

// Full factorization by exhaustive search over monic candidates of
// increasing degree; returns the sorted degrees of the irreducible factors.
inline std::vector<int> factor_degrees_by_search(Coeffs f, std::int64_t p) {
  trim(f);
  std::int64_t inv = inverse_by_search(f.back(), p);
  for (auto& c : f) c = c * inv % p;
  std::vector<int> degrees;
  int k = 1;
  while (static_cast<int>(f.size()) - 1 >= 2 * k) {
    bool found = false;
    std::int64_t count = 1;
    for (int i = 0; i < k; ++i) count *= p;
    for (std::int64_t code = 0; code < count && !found; ++code) {
      Coeffs cand(static_cast<size_t>(k) + 1, 0);
      cand[static_cast<size_t>(k)] = 1;
      std::int64_t c = code;
      for (int i = 0; i < k; ++i) {
        cand[static_cast<size_t>(i)] = c % p;
        c /= p;
      }
      if (remainder(f, cand, p).empty()) {
        degrees.push_back(k);
        f = quotient(f, cand, p);
        found = true;
      }
    }
    if (!found) ++k;
  }
  if (f.size() > 1) degrees.push_back(static_cast<int>(f.size()) - 1);
  std::sort(degrees.begin(), degrees.end());
  return degrees;
}

// ---- random inputs ----

inline Rational random_rational(std::mt19937_64& rng, long num_bound, long den_bound) {
  std::uniform_int_distribution<long> num(-num_bound, num_bound), den(1, den_bound);
  return Rational(num(rng), den(rng));
}

inline PolyQ random_poly(std::mt19937_64& rng, int degree, long bound = 9) {
  std::vector<Rational> c;
  for (int i = 0; i <= degree; ++i) c.push_back(random_rational(rng, bound, 4));
  if (c.back().is_zero()) c.back() = Rational(1);
  return PolyQ(std::move(c));
}

}  // namespace oracle
