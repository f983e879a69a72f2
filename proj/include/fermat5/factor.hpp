#pragma once

#include <utility>
#include <vector>

#include "fermat5/rational.hpp"

namespace fermat5 {

// Prime-exponent pairs, primes strictly increasing.
struct Factorization {
  std::vector<std::pair<BigInt, unsigned>> terms;

  BigInt product() const;
  friend bool operator==(const Factorization&, const Factorization&) = default;
};

// Deterministic Miller-Rabin below 3.3e24 (first 13 prime bases).
bool is_prime(const BigInt& n);

// Trial division up to 10^6, then Pollard rho with Brent cycle detection.
// Throws InputTooSmall when n < 2.
Factorization factor_integer(const BigInt& n);

// The unique squarefree k > 0 with |q| = k * (rational square).
// Throws ZeroInput when q = 0.
BigInt squarefree_kernel(const Rational& q);

// sign(q) * squarefree_kernel(q).
BigInt signed_squarefree_kernel(const Rational& q);

bool is_rational_square(const Rational& q);

}  // namespace fermat5
