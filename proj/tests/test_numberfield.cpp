#include <doctest.h>

#include <random>

#include "fermat5/error.hpp"
#include "fermat5/numberfield.hpp"
#include "fermat5/quintic.hpp"
#include "golden.hpp"
#include "oracles.hpp"

using namespace fermat5;

namespace {

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const MathError& e) {
    return e.code();
  }
  FAIL("no exception");
  return Errc::ParseError;
}

// Inverse via a linear solve: the coefficients c of a^{-1} satisfy
// M c = e_0 where column j of M is a * X^j mod f.
PolyQ inverse_by_linear_solve(const PolyQ& a, const PolyQ& f) {
  const int d = f.degree();
  std::vector<std::vector<Rational>> m(static_cast<size_t>(d), std::vector<Rational>(static_cast<size_t>(d) + 1));
  for (int j = 0; j < d; ++j) {
    PolyQ col = (a * PolyQ::monomial(1, j)) % f;
    for (int i = 0; i < d; ++i) m[static_cast<size_t>(i)][static_cast<size_t>(j)] = col.coeff(i);
  }
  m[0][static_cast<size_t>(d)] = 1;
  for (int k = 0; k < d; ++k) {
    int piv = k;
    while (m[static_cast<size_t>(piv)][static_cast<size_t>(k)].is_zero()) ++piv;
    std::swap(m[static_cast<size_t>(piv)], m[static_cast<size_t>(k)]);
    for (int i = 0; i < d; ++i) {
      if (i == k) continue;
      Rational factor = m[static_cast<size_t>(i)][static_cast<size_t>(k)] / m[static_cast<size_t>(k)][static_cast<size_t>(k)];
      for (int j = k; j <= d; ++j) m[static_cast<size_t>(i)][static_cast<size_t>(j)] -= factor * m[static_cast<size_t>(k)][static_cast<size_t>(j)];
    }
  }
  std::vector<Rational> c;
  for (int i = 0; i < d; ++i) c.push_back(m[static_cast<size_t>(i)][static_cast<size_t>(d)] / m[static_cast<size_t>(i)][static_cast<size_t>(i)]);
  return PolyQ(std::move(c));
}

}  // namespace

TEST_CASE("context construction") {
  auto ctx = NumberFieldCtx::create(PolyQ{2, 2, 2});
  CHECK(ctx->modulus() == golden::x2x1());
  CHECK(code_of([] { NumberFieldCtx::create(PolyQ{5}); }) == Errc::DegreeTooSmall);
  CHECK(code_of([] { NumberFieldCtx::create(PolyQ{1, 2, 1}); }) == Errc::NotSquarefree);
}

TEST_CASE("nf_mul and nf_inverse in Q(zeta_3)") {
  FieldRef k = eisenstein_field();
  NFElement x = NFElement::generator(k);
  CHECK(nf_mul(x, x) == NFElement(k, PolyQ{-1, -1}));
  CHECK(nf_inverse(x) == NFElement(k, PolyQ{-1, -1}));
  NFElement one = NFElement::from_rational(k, 1);
  CHECK(nf_inverse(one) == one);
  CHECK(nf_mul(x, nf_inverse(x)) == one);
  CHECK(x.pow(3) == one);
  CHECK(code_of([&] { nf_inverse(NFElement::from_rational(k, 0)); }) == Errc::NotInvertible);
}

TEST_CASE("arithmetic in Q(alpha) for t = 5/2") {
  ParamData pd = build_params(Rational(5, 2));
  FieldRef k = field_of(pd);
  NFElement alpha = NFElement::generator(k), beta = build_beta(pd, k);
  NFElement one = NFElement::from_rational(k, 1);

  NFElement inv = nf_inverse(alpha);
  CHECK(inv.representative().degree() == 5);
  CHECK(inv.representative() == inverse_by_linear_solve(alpha.representative(), pd.f));
  CHECK(nf_mul(alpha, inv) == one);

  CHECK(nf_mul(beta, nf_inverse(beta / alpha)) == alpha);
  CHECK(nf_inverse(beta).representative() == inverse_by_linear_solve(beta.representative(), pd.f));

  CHECK(nf_eval_poly(pd.f, alpha).is_zero());
  CHECK(nf_eval_poly(pd.f, beta).is_zero());
  CHECK(nf_eval_poly(golden::x2x1(), NFElement::generator(eisenstein_field())).is_zero());
}

TEST_CASE("inverse property over random elements and moduli") {
  std::mt19937_64 rng(23);
  int tested = 0;
  for (int trial = 0; trial < 40; ++trial) {
    PolyQ f = oracle::random_poly(rng, 2 + static_cast<int>(rng() % 5));
    if (!is_squarefree(f)) continue;
    auto k = NumberFieldCtx::create(f);
    NFElement g = NFElement::generator(k);
    CHECK(nf_eval_poly(f, g).is_zero());
    NFElement a(k, oracle::random_poly(rng, k->degree() + 2));
    try {
      NFElement inv = nf_inverse(a);
      CHECK(nf_mul(a, inv) == NFElement::from_rational(k, 1));
      CHECK(inv.representative().degree() < k->degree());
      ++tested;
    } catch (const NotInvertibleError& e) {
      // the witness really divides both
      CHECK(e.factor().degree() >= 1);
      CHECK((k->modulus() % e.factor()).is_zero());
      CHECK((a.representative() % e.factor()).is_zero());
    }
    NFElement b(k, oracle::random_poly(rng, 7));
    CHECK((a * b).representative().degree() < k->degree());
    CHECK((a + b) - b == a);
  }
  CHECK(tested > 10);
}

TEST_CASE("NotInvertible witness on a composite modulus") {
  auto k = NumberFieldCtx::create(PolyQ{-1, 0, 1});  // (X - 1)(X + 1)
  try {
    nf_inverse(NFElement(k, PolyQ{-1, 1}));
    FAIL("expected NotInvertibleError");
  } catch (const NotInvertibleError& e) {
    CHECK(e.code() == Errc::NotInvertible);
    CHECK(e.factor() == PolyQ{-1, 1});
  }
}

TEST_CASE("context mismatch") {
  FieldRef k1 = eisenstein_field(), k2 = NumberFieldCtx::create(PolyQ{-2, 0, 1});
  NFElement a = NFElement::generator(k1), b = NFElement::generator(k2);
  CHECK(code_of([&] { nf_mul(a, b); }) == Errc::ContextMismatch);
  CHECK(code_of([&] { (void)(a == b); }) == Errc::ContextMismatch);
  CHECK(code_of([&] { nf_poly_product_of_linears(k1, {a, b}); }) == Errc::ContextMismatch);
  // equal moduli in separate contexts are compatible
  NFElement c = NFElement::generator(NumberFieldCtx::create(golden::x2x1()));
  CHECK(nf_mul(a, c) == NFElement(k1, PolyQ{-1, -1}));
}

TEST_CASE("product of linears") {
  FieldRef k = eisenstein_field();
  NFElement z = NFElement::generator(k);
  CHECK(rational_coefficients(nf_poly_product_of_linears(k, {z, z * z})) == golden::x2x1());
  NFPoly empty = nf_poly_product_of_linears(k, {});
  CHECK(rational_coefficients(empty) == PolyQ{1});

  ParamData pd = build_params(Rational(5, 2));
  FieldRef kt = field_of(pd);
  NFElement a = NFElement::generator(kt), b = build_beta(pd, kt);
  NFPoly full = nf_poly_product_of_linears(kt, {a, b, b / a, nf_inverse(a), nf_inverse(b), a / b});
  CHECK(rational_coefficients(full) == golden::f_five_halves());
  // a partial product is not rational
  CHECK_FALSE(rational_coefficients(nf_poly_product_of_linears(kt, {a, b})).has_value());
}

TEST_CASE("serialization") {
  FieldRef k = eisenstein_field();
  SerializedElement s = serialize(NFElement(k, PolyQ{Rational(1, 2), -3}));
  CHECK(s.modulus == std::vector<std::string>{"1", "1", "1"});
  CHECK(s.coeffs == std::vector<std::string>{"1/2", "-3"});
}
