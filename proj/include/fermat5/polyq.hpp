#pragma once

#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fermat5/rational.hpp"

namespace fermat5 {

// Dense univariate polynomial over Q, coefficients lowest degree first,
// always trimmed so the leading coefficient is nonzero (or the list is empty).
class PolyQ {
 public:
  PolyQ() = default;
  explicit PolyQ(std::vector<Rational> coeffs);
  PolyQ(std::initializer_list<Rational> coeffs);

  static PolyQ constant(const Rational& c);
  static PolyQ monomial(const Rational& c, int degree);
  static PolyQ x() { return monomial(1, 1); }

  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }

  // Coefficient of X^i; zero beyond the degree.
  Rational coeff(int i) const;
  const Rational& leading() const;
  const std::vector<Rational>& coeffs() const { return c_; }

  Rational operator()(const Rational& x) const;  // Horner
  int sign_at(const Rational& x) const { return (*this)(x).sign(); }

  PolyQ derivative() const;
  PolyQ monic() const;
  PolyQ reversed(int n) const;  // X^n * p(1/X), n >= degree
  PolyQ pow(unsigned e) const;
  PolyQ compose(const PolyQ& inner) const;

  PolyQ& operator+=(const PolyQ& o);
  PolyQ& operator-=(const PolyQ& o);
  PolyQ& operator*=(const PolyQ& o);
  PolyQ& operator*=(const Rational& s);

  friend PolyQ operator+(PolyQ a, const PolyQ& b) { return a += b; }
  friend PolyQ operator-(PolyQ a, const PolyQ& b) { return a -= b; }
  friend PolyQ operator*(PolyQ a, const PolyQ& b) { return a *= b; }
  friend PolyQ operator*(PolyQ a, const Rational& s) { return a *= s; }
  friend PolyQ operator*(const Rational& s, PolyQ a) { return a *= s; }
  PolyQ operator-() const;

  friend bool operator==(const PolyQ&, const PolyQ&) = default;

  // Human-readable, highest degree first, e.g. "X^2 - 1/2*X + 3".
  std::string pretty(char var = 'X') const;

 private:
  void trim();
  std::vector<Rational> c_;
};

struct DivMod {
  PolyQ quotient;
  PolyQ remainder;
};

// a = b*quotient + remainder with deg remainder < deg b. Throws DivisionByZeroPoly.
DivMod divmod(const PolyQ& a, const PolyQ& b);
PolyQ operator/(const PolyQ& a, const PolyQ& b);
PolyQ operator%(const PolyQ& a, const PolyQ& b);

// Monic gcd (zero when both inputs are zero).
PolyQ gcd(const PolyQ& a, const PolyQ& b);

struct ExtendedGcd {
  PolyQ g;  // monic
  PolyQ s;  // s*a + t*b = g
  PolyQ t;
};
ExtendedGcd extended_gcd(const PolyQ& a, const PolyQ& b);

bool is_squarefree(const PolyQ& p);

// Positive rational c with p = c * q, q having coprime integer coefficients.
Rational content(const PolyQ& p);
// p / content(p): integer coefficients, gcd 1, same sign pattern as p.
PolyQ primitive_part(const PolyQ& p);
std::vector<BigInt> integer_coeffs(const PolyQ& primitive);

// Rational roots with multiplicity, ascending. Throws ZeroPolynomial.
std::vector<Rational> rational_roots(const PolyQ& p);

// Coefficient list as "p/q" strings, lowest degree first.
std::vector<std::string> serialize(const PolyQ& p);

// ---- resultants ----

// Subresultant PRS. Throws BothZero.
Rational resultant(const PolyQ& a, const PolyQ& b);

// (-1)^{d(d-1)/2} res(p, p') / lc(p). Throws DegreeTooSmall when deg p < 1.
Rational discriminant(const PolyQ& p);

// Polynomial in Y whose coefficients (lowest first) lie in Q[X].
using PolyQY = std::vector<PolyQ>;

// res_Y(a, b) as the Sylvester determinant over Q[X], by Bareiss elimination.
// Throws BothZero when either input is zero in Y.
PolyQ sylvester_resultant_polycoeff(const PolyQY& a, const PolyQY& b);

// Substitute X = x into every coefficient.
PolyQ specialize_x(const PolyQY& a, const Rational& x);

}  // namespace fermat5
