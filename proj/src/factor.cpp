#include "fermat5/factor.hpp"

#include <algorithm>
#include <map>

#include "fermat5/error.hpp"

namespace fermat5 {

namespace {

constexpr unsigned long kTrialBound = 1'000'000;

// Miller-Rabin with the first 13 primes is exact for n < 3317044064679887385961981.
const BigInt kMillerRabinBound("3317044064679887385961981", 10);
constexpr unsigned long kWitnesses[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};

BigInt powm(const BigInt& b, const BigInt& e, const BigInt& m) {
  BigInt r;
  mpz_powm(r.get_mpz_t(), b.get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
  return r;
}

bool miller_rabin(const BigInt& n) {
  BigInt d = n - 1;
  unsigned s = 0;
  while (mpz_even_p(d.get_mpz_t())) {
    d >>= 1;
    ++s;
  }
  for (unsigned long a : kWitnesses) {
    BigInt x = powm(BigInt(a), d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned i = 1; i < s; ++i) {
      x = x * x % n;
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

// Brent's variant; returns a nontrivial factor of the odd composite n.
BigInt pollard_brent(const BigInt& n) {
  for (unsigned long c = 1;; ++c) {
    auto step = [&](const BigInt& v) { return BigInt((v * v + c) % n); };
    BigInt y = 2, x, ys, q = 1, g = 1;
    unsigned long r = 1;
    constexpr unsigned long m = 128;
    do {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = step(y);
      unsigned long k = 0;
      do {
        ys = y;
        for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
          y = step(y);
          q = q * abs(x - y) % n;
        }
        g = gcd(q, n);
        k += m;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = step(ys);
        g = gcd(BigInt(abs(x - ys)), n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void split(const BigInt& n, std::map<BigInt, unsigned>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  BigInt d = pollard_brent(n);
  split(d, out);
  split(BigInt(n / d), out);
}

}  // namespace

BigInt Factorization::product() const {
  BigInt p = 1;
  for (const auto& [prime, e] : terms) {
    BigInt pe;
    mpz_pow_ui(pe.get_mpz_t(), prime.get_mpz_t(), e);
    p *= pe;
  }
  return p;
}

bool is_prime(const BigInt& n) {
  if (n < 2) return false;
  for (unsigned long p : kWitnesses) {
    if (n == p) return true;
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
  }
  if (n < kMillerRabinBound) return miller_rabin(n);
  return mpz_probab_prime_p(n.get_mpz_t(), 30) > 0;
}

Factorization factor_integer(const BigInt& n) {
  if (n < 2) throw MathError(Errc::InputTooSmall, "factor_integer needs n >= 2, got " + n.get_str());
  std::map<BigInt, unsigned> found;
  BigInt rest = n;
  for (unsigned long p = 2; p <= kTrialBound; p += (p == 2 ? 1 : 2)) {
    if (BigInt(p) * p > rest) break;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      ++found[BigInt(p)];
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
    }
  }
  split(rest, found);
  Factorization f;
  for (auto& [p, e] : found) f.terms.emplace_back(p, e);
  return f;
}

namespace {

BigInt kernel_of(const BigInt& n) {
  if (n == 1) return 1;
  BigInt k = 1;
  for (const auto& [p, e] : factor_integer(n).terms)
    if (e % 2 == 1) k *= p;
  return k;
}

}  // namespace

BigInt squarefree_kernel(const Rational& q) {
  if (q.is_zero()) throw MathError(Errc::ZeroInput, "squarefree kernel of 0");
  // num and den are coprime, so their kernels are too.
  return kernel_of(abs(q.num())) * kernel_of(q.den());
}

BigInt signed_squarefree_kernel(const Rational& q) {
  BigInt k = squarefree_kernel(q);
  return q.sign() < 0 ? BigInt(-k) : k;
}

bool is_rational_square(const Rational& q) {
  if (q.sign() < 0) return false;
  return mpz_perfect_square_p(q.raw().get_num_mpz_t()) && mpz_perfect_square_p(q.raw().get_den_mpz_t());
}

}  // namespace fermat5
