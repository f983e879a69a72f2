#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "fermat5/numberfield.hpp"
#include "fermat5/polyfp.hpp"
#include "fermat5/polyq.hpp"
#include "fermat5/roots.hpp"

namespace fermat5 {

// Everything the family attaches to one rational parameter t != 2:
// the sextic f_t, the coefficients a_0..a_5 of the map x -> y, and the
// cubic g_t satisfied by x + 1/x.
struct ParamData {
  Rational t;
  Rational u, v, w;
  Rational s;
  std::array<Rational, 6> a;
  PolyQ f;
  PolyQ g;

  // t = 1: f_1 = (X^2+X+1)^3 and the field collapses to Q(zeta_3).
  bool degenerate() const { return t == Rational(1); }
};

// Throws DegenerateParameter for t = 2.
ParamData build_params(const Rational& t);

// t^2 + t - 1
Rational conic_scale(const Rational& t);
// 7X^5 - 10X^4 - 20X^3 - 4; its positive root r bounds the totally real range.
PolyQ r_polynomial();
// (2 - t)(7t^5 - 10t^4 - 20t^3 - 4)
Rational quadratic_discriminant(const Rational& t);
// Remainder of f_t modulo X^2+X+1 in closed form:
// 5(t^4 - 3t^3 + 4t^2 - 2t + 1)(t - 1) / ((2 - t)(t^2 + t - 1)^2).
Rational cyclotomic_remainder_closed_form(const Rational& t);
// Closed form of disc(g_t).
Rational cubic_discriminant_closed_form(const Rational& t);

// x^2 + x + 1
PolyQ cyclotomic3();

// ---- irreducibility ----

struct PrimePattern {
  std::uint64_t prime;
  DegreePattern pattern;
};

struct IrreducibilityVerdict {
  enum class Kind { Irreducible, Reducible, Inconclusive };
  Kind kind = Kind::Inconclusive;
  std::vector<PrimePattern> witnesses;  // patterns that cut down the admissible factor degrees
  std::vector<PrimePattern> scanned;    // every good prime examined
  std::optional<PolyQ> factor;          // set for Reducible
  Rational cyclotomic_remainder;        // f_t mod X^2+X+1 (a constant)
};

std::string_view kind_name(IrreducibilityVerdict::Kind kind);

inline constexpr unsigned kSievePrimeBound = 200;

// Rational roots and X^2+X+1 divisibility first, then the degree-pattern sieve
// over primes below prime_bound. Throws DegenerateParameter for t = 2.
IrreducibilityVerdict certify_irreducible(const ParamData& pd, unsigned prime_bound = kSievePrimeBound);

// Proper factor degrees (1..deg-1) compatible with every pattern seen.
std::vector<int> admissible_factor_degrees(int degree, const std::vector<DegreePattern>& patterns);

// ---- the field K_t = Q(alpha) ----

// Q[X]/(f_t). Throws DegenerateParameter at t = 1.
FieldRef field_of(const ParamData& pd);
// Q[X]/(X^2+X+1), the home of zeta_3.
FieldRef eisenstein_field();

// beta = sum a_i alpha^i. Throws ContextMismatch / DegenerateParameter.
NFElement build_beta(const ParamData& pd, const FieldRef& ctx);

bool verify_fermat_point(const NFElement& x, const NFElement& y);
bool verify_conic_point(const ParamData& pd, const NFElement& x, const NFElement& y);

// alpha, beta, beta/alpha, 1/alpha, 1/beta, alpha/beta, checked pairwise
// distinct and with prod (X - r_i) = f_t. Throws SeparabilityFailure otherwise.
std::vector<NFElement> six_roots(const ParamData& pd, const FieldRef& ctx);

struct ProjectivePointNF {
  NFElement x;
  NFElement y;
  NFElement z;
};

// The Galois orbit of [alpha, beta, 1], each point verified on the quintic and
// on the conic.
std::vector<ProjectivePointNF> orbit_points(const ParamData& pd, const FieldRef& ctx);

// t = -(x^2 + y^2 + 1) / (xy + x + y). Throws PhiUndefined / NonRationalValue.
Rational recover_parameter(const NFElement& x, const NFElement& y);

// Conic a x^2 + b y^2 + c z^2 + d xy + e xz + f yz through the point
// P = [zeta, zeta^2, 1] and tangent there to the quintic. Evaluates the
// coefficient criterion and the direct computation in Q(zeta_3); throws
// OracleDisagreement if they differ, ZeroConic for the zero form.
bool check_tangency_pencil(const Rational& a, const Rational& b, const Rational& c, const Rational& d,
                           const Rational& e, const Rational& f);

// res_Y(X^5 + Y^5 + 1, X^2 + Y^2 + 1 + t(XY + X + Y)).
PolyQ intersection_resultant(const Rational& t);
// (2 - t)(t^2 + t - 1)^2 (X^2+X+1)^2 f_t
PolyQ expected_intersection_resultant(const ParamData& pd);
bool check_resultant_identity(const ParamData& pd);

struct TotallyRealVerdict {
  bool verdict = false;
  int sturm_count = 0;
  bool disc_sign_positive = false;
  bool delta_matches_closed_form = false;
};

// Throws DegenerateParameter for t = 1, OracleDisagreement if the Sturm count
// and the sign of (2-t)(7t^5-10t^4-20t^3-4) disagree.
TotallyRealVerdict totally_real_verdict(const ParamData& pd);

// g_t has no rational root and disc(g_t) is not a square. Requires an
// Irreducible verdict and a passed six-root check (PrerequisiteMissing).
bool galois_s3_verdict(const ParamData& pd, const IrreducibilityVerdict& irreducible, bool six_roots_ok);

// Signed squarefree kernel of (2-t)(7t^5-10t^4-20t^3-4).
BigInt quad_kernel(const ParamData& pd);

// t strictly between 2 and r, decided by exact signs.
bool in_totally_real_range(const Rational& t);

// Admissible t = p/q in lowest terms with 2 < t < r and q <= height_bound,
// ascending. Empty for height_bound < 3.
std::vector<Rational> admissible_parameters(unsigned height_bound);

struct NumericPoint {
  IsolatingInterval x_interval;
  Rational x_mid;
  Rational y_mid;
  Rational fermat_residual;  // x^5 + y^5 + 1 at the midpoint pair
  Rational conic_residual;   // x^2 + y^2 + 1 + t(xy + x + y)
  Rational x_error_bound;    // |x_mid - x| <= width / 2
  Rational y_error_bound;    // |y_mid - y| from a derivative bound of sum a_i x^i
};

// Throws NotTotallyReal unless f_t has six real roots.
std::vector<NumericPoint> numeric_points(const ParamData& pd, const Rational& precision);

}  // namespace fermat5
