#include <algorithm>

#include "fermat5/error.hpp"
#include "fermat5/polyq.hpp"

namespace fermat5 {

namespace {

// Integer polynomial, lowest degree first, trimmed.
using ZPoly = std::vector<BigInt>;

int deg(const ZPoly& p) { return static_cast<int>(p.size()) - 1; }

void trim(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

BigInt ipow(const BigInt& b, long e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(e));
  return r;
}

// lc(b)^(deg a - deg b + 1) * a mod b, computed without fractions.
ZPoly pseudo_remainder(ZPoly r, const ZPoly& b) {
  const int db = deg(b);
  const BigInt& lb = b.back();
  int steps = deg(r) - db + 1;
  while (!r.empty() && deg(r) >= db) {
    BigInt lr = r.back();
    int shift = deg(r) - db;
    for (auto& c : r) c *= lb;
    for (int j = 0; j <= db; ++j) r[static_cast<size_t>(shift + j)] -= lr * b[static_cast<size_t>(j)];
    trim(r);
    --steps;
  }
  if (steps > 0) {
    BigInt f = ipow(lb, steps);
    for (auto& c : r) c *= f;
  }
  return r;
}

void divexact(ZPoly& p, const BigInt& d) {
  for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
}

// Subresultant algorithm on primitive integer inputs, both of degree >= 1.
BigInt subresultant(ZPoly a, ZPoly b) {
  BigInt s = 1;
  if (deg(a) < deg(b)) {
    std::swap(a, b);
    if (deg(a) % 2 == 1 && deg(b) % 2 == 1) s = -1;
  }
  BigInt g = 1, h = 1;
  while (true) {
    const int delta = deg(a) - deg(b);
    if (deg(a) % 2 == 1 && deg(b) % 2 == 1) s = -s;
    ZPoly r = pseudo_remainder(a, b);
    a = std::move(b);
    b = std::move(r);
    if (b.empty()) return 0;
    divexact(b, BigInt(g * ipow(h, delta)));
    g = a.back();
    if (delta >= 1) {
      BigInt num = ipow(g, delta);
      BigInt den = ipow(h, delta - 1);
      mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    }
    if (deg(b) == 0) break;
  }
  BigInt num = ipow(b.back(), deg(a));
  BigInt den = ipow(h, deg(a) - 1);
  BigInt out;
  mpz_divexact(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return s * out;
}

}  // namespace

Rational resultant(const PolyQ& a, const PolyQ& b) {
  if (a.is_zero() && b.is_zero()) throw MathError(Errc::BothZero, "resultant of two zero polynomials");
  if (a.is_zero() || b.is_zero()) return 0;
  const int m = a.degree(), n = b.degree();
  if (m == 0) return a.leading().pow(n);
  if (n == 0) return b.leading().pow(m);
  Rational ca = content(a), cb = content(b);
  BigInt core = subresultant(integer_coeffs(primitive_part(a)), integer_coeffs(primitive_part(b)));
  return ca.pow(n) * cb.pow(m) * Rational(core);
}

Rational discriminant(const PolyQ& p) {
  const int d = p.degree();
  if (d < 1) throw MathError(Errc::DegreeTooSmall, "discriminant needs degree >= 1");
  Rational r = resultant(p, p.derivative()) / p.leading();
  return (d * (d - 1) / 2) % 2 == 0 ? r : -r;
}

namespace {

int degree_y(const PolyQY& a) {
  int d = static_cast<int>(a.size()) - 1;
  while (d >= 0 && a[static_cast<size_t>(d)].is_zero()) --d;
  return d;
}

PolyQ divide_exact(const PolyQ& a, const PolyQ& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw MathError(Errc::OracleDisagreement, "Bareiss step left a remainder");
  return q;
}

}  // namespace

PolyQ sylvester_resultant_polycoeff(const PolyQY& a, const PolyQY& b) {
  const int m = degree_y(a), n = degree_y(b);
  if (m < 0 || n < 0) throw MathError(Errc::BothZero, "sylvester resultant with a zero input");
  const size_t size = static_cast<size_t>(m + n);
  if (size == 0) return PolyQ::constant(1);

  std::vector<std::vector<PolyQ>> mat(size, std::vector<PolyQ>(size));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= m; ++j) mat[static_cast<size_t>(i)][static_cast<size_t>(i + j)] = a[static_cast<size_t>(m - j)];
  for (int i = 0; i < m; ++i)
    for (int j = 0; j <= n; ++j)
      mat[static_cast<size_t>(n + i)][static_cast<size_t>(i + j)] = b[static_cast<size_t>(n - j)];

  // Fraction-free elimination: every division below is exact in Q[X].
  PolyQ prev = PolyQ::constant(1);
  bool negate = false;
  for (size_t k = 0; k + 1 < size; ++k) {
    if (mat[k][k].is_zero()) {
      size_t pivot = k + 1;
      while (pivot < size && mat[pivot][k].is_zero()) ++pivot;
      if (pivot == size) return {};
      std::swap(mat[k], mat[pivot]);
      negate = !negate;
    }
    for (size_t i = k + 1; i < size; ++i) {
      for (size_t j = k + 1; j < size; ++j)
        mat[i][j] = divide_exact(mat[k][k] * mat[i][j] - mat[i][k] * mat[k][j], prev);
      mat[i][k] = PolyQ{};
    }
    prev = mat[k][k];
  }
  PolyQ det = mat[size - 1][size - 1];
  return negate ? -det : det;
}

}  // namespace fermat5
