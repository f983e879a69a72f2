#include <doctest.h>

#include <random>

#include "fermat5/error.hpp"
#include "fermat5/factor.hpp"
#include "fermat5/polyfp.hpp"
#include "golden.hpp"
#include "oracles.hpp"

using namespace fermat5;

namespace {

// Residue of a rational mod p, computed by brute-force inverse search.
std::int64_t residue(const Rational& q, std::int64_t p) {
  BigInt n = q.num() % p, d = q.den() % p;
  std::int64_t num = (n.get_si() + p) % p, den = (d.get_si() + p) % p;
  return num * oracle::inverse_by_search(den, p) % p;
}

oracle::Coeffs to_coeffs(const PolyFp& f) {
  oracle::Coeffs c;
  for (auto x : f.coeffs()) c.push_back(static_cast<std::int64_t>(x));
  return c;
}

bool in_s3_set(const DegreePattern& pat) {
  return pat == DegreePattern{1, 1, 1, 1, 1, 1} || pat == DegreePattern{2, 2, 2} || pat == DegreePattern{3, 3};
}

PolyFp random_monic(std::mt19937_64& rng, std::uint64_t p, int degree) {
  std::uniform_int_distribution<std::uint64_t> d(0, p - 1);
  std::vector<std::uint64_t> c;
  for (int i = 0; i < degree; ++i) c.push_back(d(rng));
  c.push_back(1);
  return PolyFp(p, c);
}

// Random irreducible of the given degree, checked by the exhaustive oracle.
PolyFp random_irreducible(std::mt19937_64& rng, std::uint64_t p, int degree) {
  for (;;) {
    PolyFp f = random_monic(rng, p, degree);
    if (oracle::factor_degrees_by_search(to_coeffs(f), static_cast<std::int64_t>(p)) == std::vector<int>{degree})
      return f;
  }
}

}  // namespace

TEST_CASE("word arithmetic") {
  const std::uint64_t big = (std::uint64_t{1} << 61) - 1;  // Mersenne prime
  CHECK(mul_mod(big - 1, big - 1, big) == 1);
  CHECK(pow_mod(3, big - 1, big) == 1);
  for (std::uint64_t a : std::vector<std::uint64_t>{1, 2, 12345, big - 2}) CHECK(mul_mod(a, inv_mod(a, big), big) == 1);
  CHECK(pow_mod(2, 10, 1009) == 1024 % 1009);
}

TEST_CASE("reduce_mod_p examples") {
  PolyFp r = reduce_mod_p(PolyQ{-1, 0, 1}, 7);
  CHECK(r == PolyFp(7, {6, 0, 1}));

  // every coefficient of f_{5/2} has denominator 31^k, so mod 2 is a
  // legitimate reduction; the denominator obstruction shows up at 31
  PolyFp two = reduce_mod_p(golden::f_five_halves(), 2);
  CHECK(two.degree() == 6);
  CHECK_THROWS_AS(reduce_mod_p(golden::f_five_halves(), 31), MathError);
  try {
    reduce_mod_p(golden::f_five_halves(), 31);
  } catch (const MathError& e) {
    CHECK(e.code() == Errc::BadPrime);
  }

  PolyQ f = golden::f_five_halves();
  PolyFp seven = reduce_mod_p(f, 7);
  REQUIRE(seven.degree() == 6);
  for (int i = 0; i <= 6; ++i) CHECK(static_cast<std::int64_t>(seven.coeffs()[static_cast<size_t>(i)]) == residue(f.coeff(i), 7));

  // leading coefficient vanishing, composite and oversized moduli
  CHECK_THROWS_AS(reduce_mod_p(PolyQ{1, 1, 5}, 5), MathError);
  CHECK_THROWS_AS(reduce_mod_p(PolyQ{1, 1}, 9), MathError);
  CHECK_THROWS_AS(reduce_mod_p(PolyQ{1, 1}, BigInt("2305843009213693951") * 2 + 1), MathError);
}

TEST_CASE("reduce_mod_p agrees with residues of random polynomials") {
  std::mt19937_64 rng(11);
  for (std::int64_t p : {5, 11, 101, 1009}) {
    for (int trial = 0; trial < 20; ++trial) {
      PolyQ f = oracle::random_poly(rng, 5);
      bool bad = residue(f.leading(), p) == 0;
      for (int i = 0; i <= f.degree(); ++i) bad = bad || f.coeff(i).den() % p == 0;
      if (bad) continue;
      PolyFp r = reduce_mod_p(f, p);
      CHECK(r.degree() == f.degree());
      for (int i = 0; i <= f.degree(); ++i)
        CHECK(static_cast<std::int64_t>(r.coeffs()[static_cast<size_t>(i)]) == residue(f.coeff(i), p));
    }
  }
}

TEST_CASE("degree_pattern examples") {
  CHECK(degree_pattern(PolyFp(2, {1, 1, 1})) == DegreePattern{2});
  CHECK(degree_pattern(PolyFp(7, {6, 0, 1})) == DegreePattern{1, 1});
  CHECK_THROWS_AS(degree_pattern(PolyFp(7, {1, 2, 1})), MathError);
  try {
    degree_pattern(PolyFp(7, {1, 2, 1}));
  } catch (const MathError& e) {
    CHECK(e.code() == Errc::NotSquarefreeModP);
  }
}

TEST_CASE("f_{5/2} patterns lie in the S3 set") {
  PolyQ f = golden::f_five_halves();
  int good = 0;
  for (std::int64_t p = 2; p < 400; ++p) {
    if (!is_prime(BigInt(p)) || p == 31) continue;
    PolyFp r = reduce_mod_p(f, p);
    if (!is_squarefree(r)) continue;
    ++good;
    DegreePattern pat = degree_pattern(r);
    CHECK(in_s3_set(pat));
    if (p < 50) CHECK(pat == oracle::factor_degrees_by_search(to_coeffs(r), p));
  }
  CHECK(good >= 20);
}

TEST_CASE("pattern invariants") {
  std::mt19937_64 rng(5);
  for (std::uint64_t p : std::vector<std::uint64_t>{2, 3, 5, 7, 13}) {
    for (int trial = 0; trial < 15; ++trial) {
      PolyFp f = random_monic(rng, p, 2 + static_cast<int>(rng() % 6));
      if (!is_squarefree(f)) continue;
      DegreePattern pat = degree_pattern(f);
      int sum = 0;
      for (int d : pat) sum += d;
      CHECK(sum == f.degree());
      CHECK(pat == oracle::factor_degrees_by_search(to_coeffs(f), static_cast<std::int64_t>(p)));
      for (std::uint64_t s = 2; s < p; ++s) CHECK(degree_pattern(f.scaled(s)) == pat);
    }
  }
}

TEST_CASE("constructed products recover their degrees") {
  std::mt19937_64 rng(17);
  for (std::uint64_t p : std::vector<std::uint64_t>{3, 5, 7}) {
    for (int trial = 0; trial < 6; ++trial) {
      std::vector<int> degrees;
      PolyFp prod(p, {1});
      for (int k = 0; k < 3; ++k) {
        int d = 1 + static_cast<int>(rng() % 3);
        PolyFp g = random_irreducible(rng, p, d);
        if (!gcd(prod, g).is_zero() && gcd(prod, g).degree() > 0) continue;  // keep it squarefree
        prod = prod * g;
        degrees.push_back(d);
      }
      std::sort(degrees.begin(), degrees.end());
      CHECK(degree_pattern(prod) == degrees);
    }
  }
}
