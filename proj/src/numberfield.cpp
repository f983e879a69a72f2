#include "fermat5/numberfield.hpp"

namespace fermat5 {

std::shared_ptr<const NumberFieldCtx> NumberFieldCtx::create(const PolyQ& modulus) {
  if (modulus.degree() < 1) throw MathError(Errc::DegreeTooSmall, "field modulus must have degree >= 1");
  if (!is_squarefree(modulus)) throw MathError(Errc::NotSquarefree, "field modulus " + modulus.pretty() + " is not squarefree");
  return std::shared_ptr<const NumberFieldCtx>(new NumberFieldCtx(modulus.monic()));
}

NFElement::NFElement(FieldRef ctx, const PolyQ& representative)
    : ctx_(std::move(ctx)), rep_(ctx_->reduce(representative)) {}

NFElement NFElement::from_rational(FieldRef ctx, const Rational& c) { return {std::move(ctx), PolyQ::constant(c)}; }

NFElement NFElement::generator(FieldRef ctx) { return {std::move(ctx), PolyQ::x()}; }

std::optional<Rational> NFElement::as_rational() const {
  if (rep_.degree() > 0) return std::nullopt;
  return rep_.coeff(0);
}

void require_same_context(const NFElement& a, const NFElement& b) {
  if (a.context() == b.context()) return;
  if (a.context()->modulus() != b.context()->modulus())
    throw MathError(Errc::ContextMismatch, "elements of Q[X]/(" + a.context()->modulus().pretty() + ") and Q[X]/(" +
                                               b.context()->modulus().pretty() + ")");
}

NFElement operator+(const NFElement& a, const NFElement& b) {
  require_same_context(a, b);
  return {a.ctx_, a.rep_ + b.rep_};
}

NFElement operator-(const NFElement& a, const NFElement& b) {
  require_same_context(a, b);
  return {a.ctx_, a.rep_ - b.rep_};
}

NFElement operator*(const NFElement& a, const NFElement& b) { return nf_mul(a, b); }

NFElement operator/(const NFElement& a, const NFElement& b) { return nf_mul(a, nf_inverse(b)); }

NFElement operator*(const Rational& s, const NFElement& a) { return {a.ctx_, a.rep_ * s}; }

NFElement NFElement::operator-() const { return {ctx_, -rep_}; }

bool operator==(const NFElement& a, const NFElement& b) {
  require_same_context(a, b);
  return a.rep_ == b.rep_;
}

NFElement NFElement::pow(unsigned e) const {
  NFElement result = from_rational(ctx_, 1), base = *this;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

NFElement nf_mul(const NFElement& a, const NFElement& b) {
  require_same_context(a, b);
  return {a.context(), a.representative() * b.representative()};
}

NFElement nf_inverse(const NFElement& a) {
  const PolyQ& f = a.context()->modulus();
  if (a.is_zero()) throw NotInvertibleError(f);
  ExtendedGcd eg = extended_gcd(a.representative(), f);
  if (eg.g.degree() > 0) throw NotInvertibleError(eg.g);
  return {a.context(), eg.s};
}

NFElement nf_eval_poly(const PolyQ& p, const NFElement& a) {
  NFElement acc = NFElement::from_rational(a.context(), 0);
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it)
    acc = acc * a + NFElement::from_rational(a.context(), *it);
  return acc;
}

NFPoly nf_poly_product_of_linears(const FieldRef& ctx, const std::vector<NFElement>& roots) {
  NFPoly acc{NFElement::from_rational(ctx, 1)};
  const NFElement zero = NFElement::from_rational(ctx, 0);
  for (const auto& r : roots) {
    require_same_context(acc.front(), r);
    // acc * (X - r)
    NFPoly next(acc.size() + 1, zero);
    for (size_t i = 0; i < acc.size(); ++i) {
      next[i + 1] = next[i + 1] + acc[i];
      next[i] = next[i] - acc[i] * r;
    }
    acc = std::move(next);
  }
  return acc;
}

std::optional<PolyQ> rational_coefficients(const NFPoly& p) {
  std::vector<Rational> c;
  c.reserve(p.size());
  for (const auto& e : p) {
    auto v = e.as_rational();
    if (!v) return std::nullopt;
    c.push_back(*v);
  }
  return PolyQ(std::move(c));
}

SerializedElement serialize(const NFElement& a) {
  return {fermat5::serialize(a.context()->modulus()), fermat5::serialize(a.representative())};
}

}  // namespace fermat5
