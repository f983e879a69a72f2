#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "fermat5/error.hpp"
#include "fermat5/polyq.hpp"

namespace fermat5 {

// Q[X]/(f) for a squarefree f of degree >= 1. The stored modulus is monic.
class NumberFieldCtx {
 public:
  // Throws DegreeTooSmall or NotSquarefree.
  static std::shared_ptr<const NumberFieldCtx> create(const PolyQ& modulus);

  const PolyQ& modulus() const { return modulus_; }
  int degree() const { return modulus_.degree(); }
  PolyQ reduce(const PolyQ& p) const { return p % modulus_; }

 private:
  explicit NumberFieldCtx(PolyQ monic_modulus) : modulus_(std::move(monic_modulus)) {}
  PolyQ modulus_;
};

using FieldRef = std::shared_ptr<const NumberFieldCtx>;

class NFElement {
 public:
  NFElement(FieldRef ctx, const PolyQ& representative);

  static NFElement from_rational(FieldRef ctx, const Rational& c);
  // Residue class of X.
  static NFElement generator(FieldRef ctx);

  const FieldRef& context() const { return ctx_; }
  const PolyQ& representative() const { return rep_; }
  bool is_zero() const { return rep_.is_zero(); }
  // Value when the representative has degree <= 0.
  std::optional<Rational> as_rational() const;

  NFElement pow(unsigned e) const;

  friend NFElement operator+(const NFElement& a, const NFElement& b);
  friend NFElement operator-(const NFElement& a, const NFElement& b);
  friend NFElement operator*(const NFElement& a, const NFElement& b);
  friend NFElement operator/(const NFElement& a, const NFElement& b);
  friend NFElement operator*(const Rational& s, const NFElement& a);
  NFElement operator-() const;

  // ContextMismatch is thrown for elements of different fields.
  friend bool operator==(const NFElement& a, const NFElement& b);

 private:
  FieldRef ctx_;
  PolyQ rep_;
};

// Raised by nf_inverse when gcd(representative, modulus) is nonconstant;
// the gcd is a nontrivial factor of the modulus.
class NotInvertibleError : public MathError {
 public:
  explicit NotInvertibleError(PolyQ factor)
      : MathError(Errc::NotInvertible, "shares the factor " + factor.pretty() + " with the modulus"),
        factor_(std::move(factor)) {}
  const PolyQ& factor() const { return factor_; }

 private:
  PolyQ factor_;
};

void require_same_context(const NFElement& a, const NFElement& b);

NFElement nf_mul(const NFElement& a, const NFElement& b);
NFElement nf_inverse(const NFElement& a);
NFElement nf_eval_poly(const PolyQ& p, const NFElement& a);

// Polynomial in a new variable with field coefficients, lowest degree first.
using NFPoly = std::vector<NFElement>;

// prod (X - r_i), expanded. An empty root list yields the constant 1 over ctx.
NFPoly nf_poly_product_of_linears(const FieldRef& ctx, const std::vector<NFElement>& roots);

// The polynomial over Q when every coefficient is rational.
std::optional<PolyQ> rational_coefficients(const NFPoly& p);

struct SerializedElement {
  std::vector<std::string> modulus;
  std::vector<std::string> coeffs;
};
SerializedElement serialize(const NFElement& a);

}  // namespace fermat5
