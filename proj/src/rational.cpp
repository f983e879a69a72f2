#include "fermat5/rational.hpp"

#include <cctype>

#include "fermat5/error.hpp"

namespace fermat5 {

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::ZeroInput: return "ZeroInput";
    case Errc::InputTooSmall: return "InputTooSmall";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::DivisionByZeroPoly: return "DivisionByZeroPoly";
    case Errc::BothZero: return "BothZero";
    case Errc::DegreeTooSmall: return "DegreeTooSmall";
    case Errc::NotSquarefree: return "NotSquarefree";
    case Errc::InvalidInterval: return "InvalidInterval";
    case Errc::ZeroPolynomial: return "ZeroPolynomial";
    case Errc::BadPrime: return "BadPrime";
    case Errc::NotSquarefreeModP: return "NotSquarefreeModP";
    case Errc::ContextMismatch: return "ContextMismatch";
    case Errc::NotInvertible: return "NotInvertible";
    case Errc::DegenerateParameter: return "DegenerateParameter";
    case Errc::SeparabilityFailure: return "SeparabilityFailure";
    case Errc::PhiUndefined: return "PhiUndefined";
    case Errc::NonRationalValue: return "NonRationalValue";
    case Errc::ZeroConic: return "ZeroConic";
    case Errc::OracleDisagreement: return "OracleDisagreement";
    case Errc::PrerequisiteMissing: return "PrerequisiteMissing";
    case Errc::ZeroDiscriminant: return "ZeroDiscriminant";
    case Errc::NotTotallyReal: return "NotTotallyReal";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw MathError(Errc::DivisionByZero, "zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational::Rational(long num, long den) : Rational(BigInt(num), BigInt(den)) {}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

BigInt parse_int(std::string_view s, std::string_view whole) {
  bool neg = false;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
    neg = s[0] == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s))
    throw MathError(Errc::ParseError, "not a rational: '" + std::string(whole) + "'");
  BigInt n(std::string(s), 10);
  return neg ? BigInt(-n) : n;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text, text));
  BigInt num = parse_int(text.substr(0, slash), text);
  std::string_view den_text = text.substr(slash + 1);
  if (!all_digits(den_text))
    throw MathError(Errc::ParseError, "not a rational: '" + std::string(text) + "'");
  BigInt den(std::string(den_text), 10);
  if (den == 0) throw MathError(Errc::ParseError, "zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(v_))); }

Rational Rational::inverse() const {
  if (is_zero()) throw MathError(Errc::DivisionByZero, "inverse of zero");
  return Rational(mpq_class(1 / v_));
}

Rational Rational::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  BigInt n, d;
  mpz_pow_ui(n.get_mpz_t(), v_.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(d.get_mpz_t(), v_.get_den_mpz_t(), static_cast<unsigned long>(e));
  return Rational(n, d);
}

std::string Rational::str() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational& Rational::operator+=(const Rational& o) {
  v_ += o.v_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  v_ -= o.v_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  v_ *= o.v_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw MathError(Errc::DivisionByZero, "division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::operator-() const { return Rational(mpq_class(-v_)); }

std::string to_string(const BigInt& n) { return n.get_str(); }

BigInt floor(const Rational& q) {
  BigInt r;
  mpz_fdiv_q(r.get_mpz_t(), q.raw().get_num_mpz_t(), q.raw().get_den_mpz_t());
  return r;
}

}  // namespace fermat5
