#pragma once

#include <cstdint>
#include <vector>

#include "fermat5/polyq.hpp"

namespace fermat5 {

// Residues fit a machine word: moduli stay below 2^61 and products go
// through unsigned __int128.
class PolyFp {
 public:
  PolyFp(std::uint64_t modulus, std::vector<std::uint64_t> coeffs);

  std::uint64_t modulus() const { return p_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<std::uint64_t>& coeffs() const { return c_; }
  std::uint64_t leading() const { return c_.back(); }

  PolyFp monic() const;
  PolyFp derivative() const;
  PolyFp scaled(std::uint64_t s) const;

  friend PolyFp operator+(const PolyFp& a, const PolyFp& b);
  friend PolyFp operator-(const PolyFp& a, const PolyFp& b);
  friend PolyFp operator*(const PolyFp& a, const PolyFp& b);
  friend PolyFp operator%(const PolyFp& a, const PolyFp& b);
  friend PolyFp operator/(const PolyFp& a, const PolyFp& b);
  friend bool operator==(const PolyFp&, const PolyFp&) = default;

 private:
  void trim();
  std::uint64_t p_;
  std::vector<std::uint64_t> c_;
};

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p);
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p);

PolyFp gcd(const PolyFp& a, const PolyFp& b);  // monic
PolyFp pow_mod(const PolyFp& base, std::uint64_t e, const PolyFp& modulus);

// Throws BadPrime when a coefficient denominator or the leading numerator
// vanishes mod prime, or when prime is not a prime below 2^61.
PolyFp reduce_mod_p(const PolyQ& p, const BigInt& prime);

bool is_squarefree(const PolyFp& f);

// Sorted degrees of the irreducible factors, with multiplicity.
using DegreePattern = std::vector<int>;

// Distinct-degree factorization: gcd(f, X^{p^i} - X) for i = 1, 2, ...
// Throws NotSquarefreeModP.
DegreePattern degree_pattern(const PolyFp& f);

}  // namespace fermat5
