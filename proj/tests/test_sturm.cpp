#include <doctest.h>

#include <random>

#include "fermat5/error.hpp"
#include "fermat5/roots.hpp"
#include "golden.hpp"
#include "oracles.hpp"

using namespace fermat5;

namespace {

// Rounds q to `places` decimals (half up) and returns the scaled integer.
BigInt round_scaled(const Rational& q, int places) {
  return floor(q * Rational(10).pow(places) + Rational(1, 2));
}

}  // namespace

TEST_CASE("sturm chain shape") {
  PolyQ p{-1, 0, 1};
  SturmChain chain = sturm_chain(p);
  REQUIRE(chain.entries.size() >= 2);
  CHECK(chain.entries[0] == p);
  CHECK(chain.entries[1] == p.derivative());
  CHECK(chain.entries.back().degree() == 0);
}

TEST_CASE("sturm_count examples") {
  CHECK(sturm_count(golden::x2x1()) == 0);
  CHECK(sturm_count(PolyQ{-1, 0, 1}) == 2);
  CHECK(sturm_count(golden::f_five_halves()) == 6);
  CHECK(sturm_count(PolyQ{-1, 0, 1}, Rational(0), std::nullopt) == 1);
  CHECK(sturm_count(PolyQ{-1, 0, 1}, std::nullopt, Rational(0)) == 1);
  // (lo, hi] includes hi and excludes lo
  CHECK(sturm_count(PolyQ{-1, 0, 1}, Rational(-1), Rational(1)) == 1);
  CHECK(sturm_count(PolyQ{-1, 0, 1}, Rational(-2), Rational(-1)) == 1);
  CHECK(sturm_count(PolyQ{7}) == 0);
  CHECK(sturm_count(golden::r_poly()) == 1);
  CHECK(sturm_count(golden::r_poly(), Rational(0), std::nullopt) == 1);

  try {
    sturm_count(PolyQ{-1, 1} * PolyQ{-1, 1});
    FAIL("no throw");
  } catch (const MathError& e) {
    CHECK(e.code() == Errc::NotSquarefree);
  }
  try {
    sturm_count(PolyQ{-1, 0, 1}, Rational(1), Rational(1));
    FAIL("no throw");
  } catch (const MathError& e) {
    CHECK(e.code() == Errc::InvalidInterval);
  }
}

TEST_CASE("isolate_real_roots examples") {
  auto sqrt2 = isolate_real_roots(PolyQ{-2, 0, 1});
  REQUIRE(sqrt2.size() == 2);
  CHECK(sqrt2[0].hi <= sqrt2[1].lo);
  auto neg = refine(sqrt2[0], Rational(1, 4)), pos = refine(sqrt2[1], Rational(1, 4));
  CHECK(neg.lo >= Rational(-2));
  CHECK(neg.hi <= Rational(-1));
  CHECK(pos.lo >= Rational(1));
  CHECK(pos.hi <= Rational(2));

  auto r = isolate_real_roots(golden::r_poly());
  REQUIRE(r.size() == 1);
  CHECK(r[0].hi > Rational(0));
  auto narrow = refine(r[0], Rational(1, 1000));
  CHECK(narrow.width() <= Rational(1, 1000));
  CHECK(narrow.hi > Rational(2558, 1000));
  CHECK(narrow.lo < Rational(2559, 1000));
  // r = 2.558...: [2.558, 2.559] isolates it
  CHECK(sturm_count(golden::r_poly(), Rational(2558, 1000), Rational(2559, 1000)) == 1);
  auto finer = refine(r[0], Rational(1, 10000));
  CHECK(finer.lo >= Rational(2558, 1000));
  CHECK(finer.hi <= Rational(2559, 1000));

  auto six = isolate_real_roots(golden::f_five_halves());
  REQUIRE(six.size() == 6);
  for (size_t i = 0; i < six.size(); ++i) {
    CHECK(six[i].lo < six[i].hi);
    CHECK(sturm_count(six[i].target, six[i].lo, six[i].hi) == 1);
    CHECK(six[i].target.sign_at(six[i].lo) * six[i].target.sign_at(six[i].hi) < 0);
    if (i > 0) CHECK(six[i - 1].hi <= six[i].lo);
  }
}

TEST_CASE("refine examples") {
  auto root = isolate_real_roots(PolyQ{-2, 0, 1})[1];
  auto iv = refine(root, Rational(1, 8));
  CHECK(iv.width() <= Rational(1, 8));
  CHECK((iv.midpoint() - Rational(141421, 100000)).abs() < Rational(1, 8));
  CHECK(iv.lo * iv.lo < Rational(2));
  CHECK(iv.hi * iv.hi >= Rational(2));

  // Exact sign oracle: r(2.558591) < 0 < r(2.558592), so r rounds to 2.55859.
  PolyQ rp = golden::r_poly();
  CHECK(rp(Rational(2558591, 1000000)).sign() < 0);
  CHECK(rp(Rational(2558592, 1000000)).sign() > 0);
  auto r6 = refine(isolate_real_roots(rp)[0], Rational(1, 1000000));
  CHECK(r6.width() <= Rational(1, 1000000));
  CHECK(round_scaled(r6.lo, 5) == 255859);
  CHECK(round_scaled(r6.hi, 5) == 255859);

  // already narrow enough: unchanged
  IsolatingInterval same = refine(r6, Rational(1));
  CHECK(same.lo == r6.lo);
  CHECK(same.hi == r6.hi);

  // root exactly at a bisection point
  IsolatingInterval exact{Rational(0), Rational(2), PolyQ{-1, 1}};
  auto hit = refine(exact, Rational(1, 100));
  CHECK(hit.width() <= Rational(1, 100));
  CHECK(hit.lo < Rational(1));
  CHECK(hit.hi >= Rational(1));

  try {
    refine({Rational(3), Rational(4), PolyQ{-2, 0, 1}}, Rational(1, 10));
    FAIL("no throw");
  } catch (const MathError& e) {
    CHECK(e.code() == Errc::InvalidInterval);
  }
}

TEST_CASE("isolation count equals Sturm count on random squarefree inputs") {
  std::mt19937_64 rng(2024);
  int checked = 0;
  while (checked < 80) {
    PolyQ p{1};
    int linear = static_cast<int>(rng() % 5);
    for (int j = 0; j < linear; ++j) p *= PolyQ{-oracle::random_rational(rng, 30, 7), 1};
    int quadratic = static_cast<int>(rng() % 2);
    for (int j = 0; j < quadratic; ++j) p *= PolyQ{oracle::random_rational(rng, 9, 3), 0, 1};
    if (rng() % 3 == 0) p = p + oracle::random_poly(rng, 2, 3);
    if (p.degree() < 1 || !is_squarefree(p)) continue;
    ++checked;
    auto ivs = isolate_real_roots(p);
    CHECK(static_cast<int>(ivs.size()) == sturm_count(p));
    for (const auto& iv : ivs) {
      CHECK(sturm_count(p, iv.lo, iv.hi) == 1);
      CHECK(!p(iv.lo).is_zero());
    }
  }
}
