#include "fermat5/polyfp.hpp"

#include <algorithm>

#include "fermat5/error.hpp"
#include "fermat5/factor.hpp"

namespace fermat5 {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mul_mod(r, a, p);
    a = mul_mod(a, a, p);
    e >>= 1;
  }
  return r;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  if (a % p == 0) throw MathError(Errc::DivisionByZero, "inverse of 0 mod p");
  return pow_mod(a, p - 2, p);
}

PolyFp::PolyFp(std::uint64_t modulus, std::vector<std::uint64_t> coeffs) : p_(modulus), c_(std::move(coeffs)) {
  for (auto& c : c_) c %= p_;
  trim();
}

void PolyFp::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

PolyFp PolyFp::scaled(std::uint64_t s) const {
  std::vector<std::uint64_t> r(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) r[i] = mul_mod(c_[i], s % p_, p_);
  return {p_, std::move(r)};
}

PolyFp PolyFp::monic() const {
  if (c_.empty()) return *this;
  return scaled(inv_mod(leading(), p_));
}

PolyFp PolyFp::derivative() const {
  if (c_.size() <= 1) return {p_, {}};
  std::vector<std::uint64_t> d(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = mul_mod(c_[i], i % p_, p_);
  return {p_, std::move(d)};
}

PolyFp operator+(const PolyFp& a, const PolyFp& b) {
  std::vector<std::uint64_t> r(std::max(a.c_.size(), b.c_.size()));
  for (size_t i = 0; i < r.size(); ++i) {
    std::uint64_t x = i < a.c_.size() ? a.c_[i] : 0;
    std::uint64_t y = i < b.c_.size() ? b.c_[i] : 0;
    r[i] = (x + y) % a.p_;
  }
  return {a.p_, std::move(r)};
}

PolyFp operator-(const PolyFp& a, const PolyFp& b) {
  std::vector<std::uint64_t> r(std::max(a.c_.size(), b.c_.size()));
  for (size_t i = 0; i < r.size(); ++i) {
    std::uint64_t x = i < a.c_.size() ? a.c_[i] : 0;
    std::uint64_t y = i < b.c_.size() ? b.c_[i] : 0;
    r[i] = (x + a.p_ - y) % a.p_;
  }
  return {a.p_, std::move(r)};
}

PolyFp operator*(const PolyFp& a, const PolyFp& b) {
  if (a.c_.empty() || b.c_.empty()) return {a.p_, {}};
  std::vector<std::uint64_t> r(a.c_.size() + b.c_.size() - 1);
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] = (r[i + j] + mul_mod(a.c_[i], b.c_[j], a.p_)) % a.p_;
  return {a.p_, std::move(r)};
}

namespace {

void long_division(const PolyFp& a, const PolyFp& b, std::vector<std::uint64_t>& quo, std::vector<std::uint64_t>& rem) {
  if (b.is_zero()) throw MathError(Errc::DivisionByZeroPoly, "division by zero mod p");
  const std::uint64_t p = a.modulus();
  rem = a.coeffs();
  const int db = b.degree();
  quo.assign(a.degree() >= db ? static_cast<size_t>(a.degree() - db + 1) : 0, 0);
  const std::uint64_t inv = inv_mod(b.leading(), p);
  for (int i = a.degree(); i >= db; --i) {
    std::uint64_t q = mul_mod(rem[static_cast<size_t>(i)], inv, p);
    quo[static_cast<size_t>(i - db)] = q;
    if (q == 0) continue;
    for (int j = 0; j <= db; ++j) {
      auto& slot = rem[static_cast<size_t>(i - db + j)];
      slot = (slot + p - mul_mod(q, b.coeffs()[static_cast<size_t>(j)], p)) % p;
    }
  }
  if (rem.size() > static_cast<size_t>(db)) rem.resize(static_cast<size_t>(std::max(db, 0)));
}

}  // namespace

PolyFp operator%(const PolyFp& a, const PolyFp& b) {
  std::vector<std::uint64_t> q, r;
  long_division(a, b, q, r);
  return {a.p_, std::move(r)};
}

PolyFp operator/(const PolyFp& a, const PolyFp& b) {
  std::vector<std::uint64_t> q, r;
  long_division(a, b, q, r);
  return {a.p_, std::move(q)};
}

PolyFp gcd(const PolyFp& a, const PolyFp& b) {
  PolyFp x = a, y = b;
  while (!y.is_zero()) {
    PolyFp r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

PolyFp pow_mod(const PolyFp& base, std::uint64_t e, const PolyFp& modulus) {
  PolyFp result(modulus.modulus(), {1});
  result = result % modulus;
  PolyFp b = base % modulus;
  while (e) {
    if (e & 1) result = (result * b) % modulus;
    e >>= 1;
    if (e) b = (b * b) % modulus;
  }
  return result;
}

namespace {

const BigInt kWordPrimeLimit = BigInt(1) << 61;

std::uint64_t to_u64(const BigInt& n) {
  return static_cast<std::uint64_t>(mpz_get_ui(n.get_mpz_t()));
}

std::uint64_t residue(const BigInt& n, const BigInt& prime) {
  BigInt r;
  mpz_fdiv_r(r.get_mpz_t(), n.get_mpz_t(), prime.get_mpz_t());
  return to_u64(r);
}

}  // namespace

PolyFp reduce_mod_p(const PolyQ& p, const BigInt& prime) {
  if (prime >= kWordPrimeLimit || !is_prime(prime))
    throw MathError(Errc::BadPrime, prime.get_str() + " is not a prime below 2^61");
  const std::uint64_t q = to_u64(prime);
  std::vector<std::uint64_t> out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) {
    std::uint64_t den = residue(c.den(), prime);
    if (den == 0) throw MathError(Errc::BadPrime, prime.get_str() + " divides a coefficient denominator");
    out.push_back(mul_mod(residue(c.num(), prime), inv_mod(den, q), q));
  }
  if (!out.empty() && out.back() == 0)
    throw MathError(Errc::BadPrime, prime.get_str() + " divides the leading coefficient");
  return {q, std::move(out)};
}

bool is_squarefree(const PolyFp& f) {
  if (f.is_zero()) return false;
  PolyFp d = f.derivative();
  if (d.is_zero()) return f.degree() == 0;
  return gcd(f, d).degree() == 0;
}

DegreePattern degree_pattern(const PolyFp& f) {
  if (!is_squarefree(f)) throw MathError(Errc::NotSquarefreeModP, "reduction is not squarefree");
  const std::uint64_t p = f.modulus();
  DegreePattern pattern;
  PolyFp rest = f.monic();
  const PolyFp x(p, {0, 1});
  PolyFp frob = x % rest;  // X^{p^i} mod rest
  for (int i = 1; 2 * i <= rest.degree(); ++i) {
    frob = pow_mod(frob, p, rest);
    PolyFp g = gcd(rest, frob - x);
    if (g.degree() > 0) {
      for (int k = 0; k < g.degree() / i; ++k) pattern.push_back(i);
      rest = rest / g;
      frob = frob % rest;
    }
  }
  if (rest.degree() > 0) pattern.push_back(rest.degree());
  std::sort(pattern.begin(), pattern.end());
  return pattern;
}

}  // namespace fermat5
