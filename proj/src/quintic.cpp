#include "fermat5/quintic.hpp"

#include <algorithm>
#include <numeric>

#include "fermat5/error.hpp"
#include "fermat5/factor.hpp"

namespace fermat5 {

namespace {

// Evaluate an integer polynomial given highest degree first.
Rational horner(std::initializer_list<long> high_to_low, const Rational& t) {
  Rational acc;
  for (long c : high_to_low) acc = acc * t + Rational(c);
  return acc;
}

void require_not_two(const Rational& t) {
  if (t == Rational(2)) throw MathError(Errc::DegenerateParameter, "t = 2: the family is undefined");
}

void require_not_one(const ParamData& pd, std::string_view what) {
  if (pd.degenerate())
    throw MathError(Errc::DegenerateParameter, std::string(what) + " at t = 1, where f_1 = (X^2+X+1)^3");
}

}  // namespace

Rational conic_scale(const Rational& t) { return horner({1, 1, -1}, t); }

PolyQ r_polynomial() { return PolyQ{-4, 0, 0, -20, -10, 7}; }

PolyQ cyclotomic3() { return PolyQ{1, 1, 1}; }

Rational quadratic_discriminant(const Rational& t) { return (Rational(2) - t) * r_polynomial()(t); }

Rational cyclotomic_remainder_closed_form(const Rational& t) {
  require_not_two(t);
  Rational d = conic_scale(t);
  return Rational(5) * horner({1, -3, 4, -2, 1}, t) * (t - Rational(1)) / ((Rational(2) - t) * d * d);
}

Rational cubic_discriminant_closed_form(const Rational& t) {
  require_not_two(t);
  Rational quartic = horner({1, -3, -1, 3, 1}, t);
  Rational tm1 = t - Rational(1);
  return Rational(-25) * quartic * quartic * r_polynomial()(t) * tm1 * tm1 /
         ((t - Rational(2)).pow(3) * conic_scale(t).pow(6));
}

ParamData build_params(const Rational& t) {
  require_not_two(t);
  ParamData pd;
  pd.t = t;
  const Rational d = conic_scale(t);
  const Rational tm2 = t - Rational(2);
  if (d.is_zero()) throw MathError(Errc::DegenerateParameter, "t^2 + t - 1 = 0");

  pd.u = horner({3, -2, 2}, t) / d;
  pd.v = horner({1, -5, 10, -20, 15, -7}, t) / (tm2 * d * d);
  pd.w = horner({-3, 10, -20, 20, -20, 6}, t) / (tm2 * d * d);
  pd.s = horner({1, -3, -1, 3, 1}, t) * tm2;
  if (pd.s.is_zero()) throw MathError(Errc::DegenerateParameter, "s vanishes");

  const Rational cubic = horner({1, -1, 2, -3}, t);  // t^3 - t^2 + 2t - 3
  pd.a[0] = -(t * t + Rational(1)) * cubic / pd.s;
  pd.a[1] = -horner({3, -9, 16, -15, 10, -11, 8, -7}, t) / (d * pd.s);
  pd.a[2] = horner({2, -14, 52, -99, 100, -54, 38, -44, 13}, t) / (d * tm2 * pd.s);
  pd.a[3] = horner({1, 1, -21, 65, -90, 78, -57, 32, -15}, t) / (d * tm2 * pd.s);
  pd.a[4] = -horner({2, -6, 13, -14, 7, -5}, t) / pd.s;
  pd.a[5] = -d * cubic / pd.s;

  pd.f = PolyQ{1, pd.u, pd.v, pd.w, pd.v, pd.u, 1};
  pd.g = PolyQ{pd.w - Rational(2) * pd.u, pd.v - Rational(3), pd.u, 1};
  return pd;
}

// ---- irreducibility ----

std::string_view kind_name(IrreducibilityVerdict::Kind kind) {
  switch (kind) {
    case IrreducibilityVerdict::Kind::Irreducible: return "Irreducible";
    case IrreducibilityVerdict::Kind::Reducible: return "Reducible";
    case IrreducibilityVerdict::Kind::Inconclusive: return "Inconclusive";
  }
  return "Unknown";
}

std::vector<int> admissible_factor_degrees(int degree, const std::vector<DegreePattern>& patterns) {
  std::vector<int> out;
  for (int k = 1; k < degree; ++k) {
    bool ok = true;
    for (const auto& pattern : patterns) {
      // subset-sum reachability of k
      std::vector<bool> reach(static_cast<size_t>(degree) + 1, false);
      reach[0] = true;
      for (int part : pattern)
        for (int s = degree; s >= part; --s)
          if (reach[static_cast<size_t>(s - part)]) reach[static_cast<size_t>(s)] = true;
      if (!reach[static_cast<size_t>(k)]) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(k);
  }
  return out;
}

namespace {

std::vector<unsigned> primes_below(unsigned bound) {
  std::vector<bool> composite(bound, false);
  std::vector<unsigned> out;
  for (unsigned i = 2; i < bound; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (unsigned j = i * i; j < bound; j += i) composite[j] = true;
  }
  return out;
}

}  // namespace

IrreducibilityVerdict certify_irreducible(const ParamData& pd, unsigned prime_bound) {
  require_not_two(pd.t);
  IrreducibilityVerdict verdict;
  const PolyQ& f = pd.f;
  verdict.cyclotomic_remainder = (f % cyclotomic3()).coeff(0);

  if (auto roots = rational_roots(f); !roots.empty()) {
    verdict.kind = IrreducibilityVerdict::Kind::Reducible;
    verdict.factor = PolyQ{-roots.front(), 1};
    return verdict;
  }
  if (verdict.cyclotomic_remainder.is_zero()) {
    verdict.kind = IrreducibilityVerdict::Kind::Reducible;
    verdict.factor = cyclotomic3();
    return verdict;
  }

  std::vector<DegreePattern> seen;
  size_t admissible = static_cast<size_t>(f.degree() - 1);
  for (unsigned p : primes_below(prime_bound)) {
    PolyFp reduced(2, {});
    try {
      reduced = reduce_mod_p(f, BigInt(p));
    } catch (const MathError& e) {
      if (e.code() == Errc::BadPrime) continue;
      throw;
    }
    if (!is_squarefree(reduced)) continue;
    DegreePattern pattern = degree_pattern(reduced);
    verdict.scanned.push_back({p, pattern});
    seen.push_back(pattern);
    size_t now = admissible_factor_degrees(f.degree(), seen).size();
    if (now < admissible) {
      verdict.witnesses.push_back({p, pattern});
      admissible = now;
    }
    if (admissible == 0) {
      verdict.kind = IrreducibilityVerdict::Kind::Irreducible;
      return verdict;
    }
  }
  verdict.kind = IrreducibilityVerdict::Kind::Inconclusive;
  return verdict;
}

// ---- field arithmetic ----

FieldRef field_of(const ParamData& pd) {
  require_not_one(pd, "K_t");
  return NumberFieldCtx::create(pd.f);
}

FieldRef eisenstein_field() {
  static const FieldRef field = NumberFieldCtx::create(cyclotomic3());
  return field;
}

NFElement build_beta(const ParamData& pd, const FieldRef& ctx) {
  require_not_one(pd, "beta");
  if (ctx->modulus() != pd.f) throw MathError(Errc::ContextMismatch, "context modulus is not f_t");
  return {ctx, PolyQ(std::vector<Rational>(pd.a.begin(), pd.a.end()))};
}

bool verify_fermat_point(const NFElement& x, const NFElement& y) {
  require_same_context(x, y);
  return (x.pow(5) + y.pow(5) + NFElement::from_rational(x.context(), 1)).is_zero();
}

bool verify_conic_point(const ParamData& pd, const NFElement& x, const NFElement& y) {
  require_same_context(x, y);
  NFElement one = NFElement::from_rational(x.context(), 1);
  return (x * x + y * y + one + pd.t * (x * y + x + y)).is_zero();
}

std::vector<NFElement> six_roots(const ParamData& pd, const FieldRef& ctx) {
  require_not_one(pd, "six_roots");
  NFElement alpha = NFElement::generator(ctx);
  NFElement beta = build_beta(pd, ctx);
  NFElement one = NFElement::from_rational(ctx, 1);
  std::vector<NFElement> roots;
  try {
    roots = {alpha, beta, beta / alpha, one / alpha, one / beta, alpha / beta};
  } catch (const NotInvertibleError& e) {
    throw MathError(Errc::SeparabilityFailure, e.what());
  }
  for (size_t i = 0; i < roots.size(); ++i) {
    if (!nf_eval_poly(pd.f, roots[i]).is_zero())
      throw MathError(Errc::SeparabilityFailure, "root " + std::to_string(i) + " does not annihilate f_t");
    for (size_t j = 0; j < i; ++j)
      if (roots[i] == roots[j])
        throw MathError(Errc::SeparabilityFailure, "roots " + std::to_string(j) + " and " + std::to_string(i) + " coincide");
  }
  auto product = rational_coefficients(nf_poly_product_of_linears(ctx, roots));
  if (!product || *product != pd.f)
    throw MathError(Errc::SeparabilityFailure, "prod (X - r_i) differs from f_t");
  return roots;
}

std::vector<ProjectivePointNF> orbit_points(const ParamData& pd, const FieldRef& ctx) {
  auto r = six_roots(pd, ctx);
  const NFElement& alpha = r[0];
  const NFElement& beta = r[1];
  const NFElement& beta_over_alpha = r[2];
  const NFElement& inv_alpha = r[3];
  const NFElement& inv_beta = r[4];
  const NFElement& alpha_over_beta = r[5];
  NFElement one = NFElement::from_rational(ctx, 1);
  std::vector<ProjectivePointNF> pts = {
      {alpha, beta, one},           {beta, alpha, one},
      {inv_alpha, beta_over_alpha, one}, {beta_over_alpha, inv_alpha, one},
      {inv_beta, alpha_over_beta, one},  {alpha_over_beta, inv_beta, one},
  };
  for (size_t i = 0; i < pts.size(); ++i) {
    const auto& pt = pts[i];
    if (pt.x.is_zero() || pt.y.is_zero())
      throw MathError(Errc::SeparabilityFailure, "trivial point in the orbit");
    if (!verify_fermat_point(pt.x, pt.y) || !verify_conic_point(pd, pt.x, pt.y))
      throw MathError(Errc::SeparabilityFailure, "orbit point " + std::to_string(i) + " is off the curves");
    for (size_t j = 0; j < i; ++j)
      if (pts[j].x == pt.x && pts[j].y == pt.y)
        throw MathError(Errc::SeparabilityFailure, "orbit points coincide");
  }
  return pts;
}

Rational recover_parameter(const NFElement& x, const NFElement& y) {
  require_same_context(x, y);
  NFElement one = NFElement::from_rational(x.context(), 1);
  NFElement den = x * y + x + y;
  if (den.is_zero()) throw MathError(Errc::PhiUndefined, "xy + x + y = 0");
  NFElement value = -(x * x + y * y + one) / den;
  auto t = value.as_rational();
  if (!t) throw MathError(Errc::NonRationalValue, "-(x^2+y^2+1)/(xy+x+y) is not rational");
  return *t;
}

bool check_tangency_pencil(const Rational& a, const Rational& b, const Rational& c, const Rational& d,
                           const Rational& e, const Rational& f) {
  if (a.is_zero() && b.is_zero() && c.is_zero() && d.is_zero() && e.is_zero() && f.is_zero())
    throw MathError(Errc::ZeroConic, "all conic coefficients vanish");

  const bool by_coefficients = a == b && b == c && d == e && e == f && d != Rational(2) * a;

  FieldRef k = eisenstein_field();
  NFElement z = NFElement::generator(k);
  NFElement z2 = z * z;
  NFElement one = NFElement::from_rational(k, 1);
  // P = [z, z^2, 1]
  NFElement value = a * z2 + b * (z2 * z2) + c * one + d * (z * z2) + e * z + f * z2;
  NFElement fx = Rational(2) * a * z + d * z2 + e * one;
  NFElement fy = Rational(2) * b * z2 + d * z + f * one;
  NFElement fz = Rational(2) * c * one + e * z + f * z2;
  const bool by_field = value.is_zero() && !fz.is_zero() && fx == z * fz && fy == z2 * fz;

  if (by_coefficients != by_field)
    throw MathError(Errc::OracleDisagreement, "tangency criterion and direct computation disagree");
  return by_coefficients;
}

PolyQ intersection_resultant(const Rational& t) {
  // X^5 + Y^5 + 1 and X^2 + Y^2 + 1 + t(XY + X + Y), as polynomials in Y.
  PolyQY quintic{PolyQ{1, 0, 0, 0, 0, 1}, {}, {}, {}, {}, PolyQ{1}};
  PolyQY conic{PolyQ{1, t, 1}, PolyQ{t, t}, PolyQ{1}};
  return sylvester_resultant_polycoeff(quintic, conic);
}

PolyQ expected_intersection_resultant(const ParamData& pd) {
  Rational d = conic_scale(pd.t);
  return (Rational(2) - pd.t) * d * d * cyclotomic3().pow(2) * pd.f;
}

bool check_resultant_identity(const ParamData& pd) {
  require_not_two(pd.t);
  return intersection_resultant(pd.t) == expected_intersection_resultant(pd);
}

TotallyRealVerdict totally_real_verdict(const ParamData& pd) {
  require_not_one(pd, "totally_real_verdict");
  TotallyRealVerdict v;
  v.sturm_count = sturm_count(pd.f);
  v.disc_sign_positive = quadratic_discriminant(pd.t).sign() > 0;
  v.delta_matches_closed_form = discriminant(pd.g) == cubic_discriminant_closed_form(pd.t);
  if ((v.sturm_count == 6) != v.disc_sign_positive)
    throw MathError(Errc::OracleDisagreement, "Sturm count " + std::to_string(v.sturm_count) +
                                                  " disagrees with the sign of (2-t)(7t^5-10t^4-20t^3-4) at t = " +
                                                  pd.t.str());
  v.verdict = v.sturm_count == 6 && v.disc_sign_positive;
  return v;
}

bool galois_s3_verdict(const ParamData& pd, const IrreducibilityVerdict& irreducible, bool six_roots_ok) {
  require_not_one(pd, "galois_s3_verdict");
  if (irreducible.kind != IrreducibilityVerdict::Kind::Irreducible)
    throw MathError(Errc::PrerequisiteMissing, "f_t is not certified irreducible");
  if (!six_roots_ok) throw MathError(Errc::PrerequisiteMissing, "six-root splitting was not verified");
  if (!rational_roots(pd.g).empty()) return false;
  return !is_rational_square(discriminant(pd.g));
}

BigInt quad_kernel(const ParamData& pd) {
  require_not_two(pd.t);
  Rational d = quadratic_discriminant(pd.t);
  if (d.is_zero()) throw MathError(Errc::ZeroDiscriminant, "(2-t)(7t^5-10t^4-20t^3-4) = 0");
  return signed_squarefree_kernel(d);
}

bool in_totally_real_range(const Rational& t) { return t > Rational(2) && r_polynomial()(t).sign() < 0; }

std::vector<Rational> admissible_parameters(unsigned height_bound) {
  std::vector<Rational> out;
  if (height_bound < 3) return out;
  for (unsigned q = 1; q <= height_bound; ++q) {
    // r < 3, so p < 3q suffices.
    for (unsigned p = 2 * q + 1; p < 3 * q; ++p) {
      if (std::gcd(p, q) != 1) continue;
      Rational t(static_cast<long>(p), static_cast<long>(q));
      if (in_totally_real_range(t)) out.push_back(t);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<NumericPoint> numeric_points(const ParamData& pd, const Rational& precision) {
  if (pd.degenerate() || sturm_count(pd.f) != 6)
    throw MathError(Errc::NotTotallyReal, "f_t does not have six real roots at t = " + pd.t.str());
  const PolyQ beta_map(std::vector<Rational>(pd.a.begin(), pd.a.end()));
  const PolyQ beta_slope = beta_map.derivative();
  std::vector<NumericPoint> out;
  for (const auto& iv : isolate_real_roots(pd.f)) {
    NumericPoint pt{refine(iv, precision), {}, {}, {}, {}, {}, {}};
    const Rational x = pt.x_interval.midpoint();
    const Rational y = beta_map(x);
    pt.x_mid = x;
    pt.y_mid = y;
    pt.fermat_residual = x.pow(5) + y.pow(5) + Rational(1);
    pt.conic_residual = x * x + y * y + Rational(1) + pd.t * (x * y + x + y);
    pt.x_error_bound = pt.x_interval.width() / Rational(2);
    Rational m = std::max(pt.x_interval.lo.abs(), pt.x_interval.hi.abs());
    // sum |i a_i| m^(i-1) bounds |y'| on the interval
    Rational slope;
    for (int i = beta_slope.degree(); i >= 0; --i) slope = slope * m + beta_slope.coeff(i).abs();
    pt.y_error_bound = slope * pt.x_error_bound;
    out.push_back(std::move(pt));
  }
  return out;
}

}  // namespace fermat5
