#include "fermat5/polyq.hpp"

#include <algorithm>
#include <sstream>

#include "fermat5/error.hpp"
#include "fermat5/factor.hpp"

namespace fermat5 {

PolyQ::PolyQ(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

PolyQ::PolyQ(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }

PolyQ PolyQ::constant(const Rational& c) { return PolyQ({c}); }

PolyQ PolyQ::monomial(const Rational& c, int degree) {
  std::vector<Rational> v(static_cast<size_t>(degree) + 1);
  v.back() = c;
  return PolyQ(std::move(v));
}

void PolyQ::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Rational PolyQ::coeff(int i) const {
  if (i < 0 || i > degree()) return 0;
  return c_[static_cast<size_t>(i)];
}

const Rational& PolyQ::leading() const {
  if (c_.empty()) throw MathError(Errc::ZeroPolynomial, "leading coefficient of 0");
  return c_.back();
}

Rational PolyQ::operator()(const Rational& x) const {
  Rational acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

PolyQ PolyQ::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rational> d(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * Rational(static_cast<long>(i));
  return PolyQ(std::move(d));
}

PolyQ PolyQ::monic() const {
  if (is_zero()) return {};
  return *this * leading().inverse();
}

PolyQ PolyQ::reversed(int n) const {
  std::vector<Rational> r(static_cast<size_t>(n) + 1);
  for (int i = 0; i <= degree(); ++i) r[static_cast<size_t>(n - i)] = c_[static_cast<size_t>(i)];
  return PolyQ(std::move(r));
}

PolyQ PolyQ::pow(unsigned e) const {
  PolyQ result = constant(1), base = *this;
  while (e) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

PolyQ PolyQ::compose(const PolyQ& inner) const {
  PolyQ acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc *= inner;
    acc += constant(*it);
  }
  return acc;
}

PolyQ& PolyQ::operator+=(const PolyQ& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

PolyQ& PolyQ::operator-=(const PolyQ& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

PolyQ& PolyQ::operator*=(const PolyQ& o) {
  if (c_.empty() || o.c_.empty()) {
    c_.clear();
    return *this;
  }
  std::vector<Rational> r(c_.size() + o.c_.size() - 1);
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  }
  c_ = std::move(r);
  trim();
  return *this;
}

PolyQ& PolyQ::operator*=(const Rational& s) {
  if (s.is_zero()) {
    c_.clear();
    return *this;
  }
  for (auto& c : c_) c *= s;
  return *this;
}

PolyQ PolyQ::operator-() const { return *this * Rational(-1); }

std::string PolyQ::pretty(char var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = c_[static_cast<size_t>(i)];
    if (c.is_zero()) continue;
    Rational mag = c.abs();
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    bool unit = mag == Rational(1);
    if (i == 0) {
      os << mag.str();
      continue;
    }
    if (!unit) os << mag.str() << "*";
    os << var;
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

DivMod divmod(const PolyQ& a, const PolyQ& b) {
  if (b.is_zero()) throw MathError(Errc::DivisionByZeroPoly, "polynomial division by zero");
  int db = b.degree();
  if (a.degree() < db) return {PolyQ{}, a};
  std::vector<Rational> rem = a.coeffs();
  std::vector<Rational> quo(static_cast<size_t>(a.degree() - db) + 1);
  Rational inv_lc = b.leading().inverse();
  for (int i = a.degree(); i >= db; --i) {
    Rational q = rem[static_cast<size_t>(i)] * inv_lc;
    quo[static_cast<size_t>(i - db)] = q;
    if (q.is_zero()) continue;
    for (int j = 0; j <= db; ++j) rem[static_cast<size_t>(i - db + j)] -= q * b.coeffs()[static_cast<size_t>(j)];
  }
  rem.resize(static_cast<size_t>(db));
  return {PolyQ(std::move(quo)), PolyQ(std::move(rem))};
}

PolyQ operator/(const PolyQ& a, const PolyQ& b) { return divmod(a, b).quotient; }
PolyQ operator%(const PolyQ& a, const PolyQ& b) { return divmod(a, b).remainder; }

PolyQ gcd(const PolyQ& a, const PolyQ& b) {
  PolyQ x = a, y = b;
  while (!y.is_zero()) {
    PolyQ r = x % y;
    x = std::move(y);
    y = primitive_part(r);
  }
  return x.monic();
}

ExtendedGcd extended_gcd(const PolyQ& a, const PolyQ& b) {
  PolyQ r0 = a, r1 = b;
  PolyQ s0 = PolyQ::constant(1), s1;
  PolyQ t0, t1 = PolyQ::constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    PolyQ s2 = s0 - q * s1;
    PolyQ t2 = t0 - q * t1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {};
  Rational inv = r0.leading().inverse();
  return {r0 * inv, s0 * inv, t0 * inv};
}

bool is_squarefree(const PolyQ& p) {
  if (p.is_zero()) return false;
  return gcd(p, p.derivative()).degree() == 0;
}

Rational content(const PolyQ& p) {
  if (p.is_zero()) return 1;
  BigInt num_gcd = 0, den_lcm = 1;
  for (const auto& c : p.coeffs()) {
    if (c.is_zero()) continue;
    num_gcd = gcd(num_gcd, BigInt(abs(c.num())));
    den_lcm = lcm(den_lcm, c.den());
  }
  return Rational(num_gcd, den_lcm);
}

PolyQ primitive_part(const PolyQ& p) {
  if (p.is_zero()) return {};
  return p * content(p).inverse();
}

std::vector<BigInt> integer_coeffs(const PolyQ& primitive) {
  std::vector<BigInt> out;
  out.reserve(primitive.coeffs().size());
  for (const auto& c : primitive.coeffs()) out.push_back(c.num());
  return out;
}

namespace {

std::vector<BigInt> divisors(const BigInt& n) {
  std::vector<BigInt> ds{1};
  if (n == 1) return ds;
  for (const auto& [p, e] : factor_integer(n).terms) {
    size_t base = ds.size();
    BigInt pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (size_t i = 0; i < base; ++i) ds.push_back(ds[i] * pk);
    }
  }
  std::sort(ds.begin(), ds.end());
  return ds;
}

}  // namespace

std::vector<Rational> rational_roots(const PolyQ& p) {
  if (p.is_zero()) throw MathError(Errc::ZeroPolynomial, "rational_roots of 0");
  std::vector<Rational> roots;
  PolyQ q = primitive_part(p);
  while (q.degree() >= 1 && q.coeff(0).is_zero()) {
    roots.emplace_back(0);
    q = q / PolyQ::x();
  }
  if (q.degree() >= 1) {
    // Candidates d/e with d | a0, e | ad. A root d/e makes (eX - d) an integer
    // factor, so (e - d) | q(1) and (e + d) | q(-1).
    BigInt a0 = abs(q.coeff(0).num());
    BigInt ad = abs(q.leading().num());
    BigInt at_one = q(Rational(1)).num();
    BigInt at_minus_one = q(Rational(-1)).num();
    auto num_divs = divisors(a0);
    auto den_divs = divisors(ad);
    for (const auto& e : den_divs) {
      for (const auto& d : num_divs) {
        if (gcd(d, e) != 1) continue;
        for (int sgn : {1, -1}) {
          BigInt dn = sgn * d;
          if (BigInt diff = e - dn; diff != 0 && at_one % diff != 0) continue;
          if (BigInt sum = e + dn; sum != 0 && at_minus_one % sum != 0) continue;
          Rational c(dn, e);
          PolyQ lin{-c, Rational(1)};
          while (q.degree() >= 1 && q(c).is_zero()) {
            roots.push_back(c);
            q = q / lin;
          }
        }
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::vector<std::string> serialize(const PolyQ& p) {
  std::vector<std::string> out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) out.push_back(c.str());
  return out;
}

PolyQ specialize_x(const PolyQY& a, const Rational& x) {
  std::vector<Rational> c;
  c.reserve(a.size());
  for (const auto& ci : a) c.push_back(ci(x));
  return PolyQ(std::move(c));
}

}  // namespace fermat5
