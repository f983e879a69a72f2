#include "fermat5/certificate.hpp"

#include <algorithm>

#include "fermat5/error.hpp"

namespace fermat5 {

namespace {

using Json = nlohmann::ordered_json;

Json str_list(const std::vector<std::string>& v) { return Json(v); }

Json rational_list(const PolyQ& p) { return str_list(serialize(p)); }

template <typename T>
Json opt(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

Json pattern_json(const std::vector<PrimePattern>& list) {
  Json out = Json::array();
  for (const auto& pp : list) out.push_back(Json{{"prime", pp.prime}, {"pattern", pp.pattern}});
  return out;
}

// Runs one check; a thrown MathError counts as a failure with its message.
template <typename F>
std::optional<bool> run_check(Certificate& cert, const char* name, F&& check) {
  try {
    bool ok = check();
    if (!ok) cert.failures.push_back(name);
    return ok;
  } catch (const MathError& e) {
    cert.failures.push_back(std::string(name) + ": " + e.what());
    return false;
  }
}

}  // namespace

std::string signed_str(const BigInt& n) { return (n > 0 ? "+" : "") + n.get_str(); }

Certificate certify(const Rational& t, std::optional<Rational> point_precision) {
  Certificate cert;
  cert.param = build_params(t);
  const ParamData& pd = cert.param;

  cert.irreducible = certify_irreducible(pd);
  cert.cyclotomic_remainder_matches = cert.irreducible.cyclotomic_remainder == cyclotomic_remainder_closed_form(t);
  if (!cert.cyclotomic_remainder_matches) cert.failures.push_back("cyclotomic_remainder");
  cert.resultant_identity_ok = *run_check(cert, "resultant_identity", [&] { return check_resultant_identity(pd); });
  cert.quadratic_discriminant = quadratic_discriminant(t);
  cert.quad_kernel = quad_kernel(pd);

  if (pd.degenerate()) {
    cert.degenerate_cube_ok = run_check(cert, "degenerate_cube", [&] {
      return pd.f == cyclotomic3().pow(3) &&
             cert.irreducible.kind == IrreducibilityVerdict::Kind::Reducible;
    });
    return cert;
  }

  if (cert.irreducible.kind != IrreducibilityVerdict::Kind::Irreducible)
    cert.failures.push_back(std::string("irreducible: ") + std::string(kind_name(cert.irreducible.kind)));

  FieldRef ctx = field_of(pd);
  cert.six_roots_ok = run_check(cert, "six_roots", [&] { return six_roots(pd, ctx).size() == 6; });
  NFElement alpha = NFElement::generator(ctx);
  NFElement beta = build_beta(pd, ctx);
  cert.fermat_ok = run_check(cert, "fermat", [&] { return verify_fermat_point(alpha, beta); });
  cert.conic_ok = run_check(cert, "conic", [&] { return verify_conic_point(pd, alpha, beta); });
  cert.parameter_recovery_ok = run_check(cert, "parameter_recovery", [&] {
    auto pts = orbit_points(pd, ctx);
    return std::all_of(pts.begin(), pts.end(), [&](const auto& pt) { return recover_parameter(pt.x, pt.y) == t; });
  });

  try {
    cert.totally_real = totally_real_verdict(pd);
    if (!cert.totally_real->delta_matches_closed_form) cert.failures.push_back("delta_closed_form");
  } catch (const MathError& e) {
    cert.failures.push_back(std::string("totally_real: ") + e.what());
  }

  if (cert.irreducible.kind == IrreducibilityVerdict::Kind::Irreducible && cert.six_roots_ok.value_or(false))
    cert.galois_s3 = run_check(cert, "galois_s3", [&] { return galois_s3_verdict(pd, cert.irreducible, true); });

  if (point_precision && cert.totally_real && cert.totally_real->verdict)
    cert.points = numeric_points(pd, *point_precision);
  return cert;
}

Json to_json(const Certificate& cert) {
  const ParamData& pd = cert.param;
  Json param{{"t", pd.t.str()},
             {"u", pd.u.str()},
             {"v", pd.v.str()},
             {"w", pd.w.str()},
             {"s", pd.s.str()},
             {"a", Json::array()},
             {"f_t", rational_list(pd.f)},
             {"g_t", rational_list(pd.g)}};
  for (const auto& a : pd.a) param["a"].push_back(a.str());

  const auto& irr = cert.irreducible;
  Json irreducible{{"verdict", std::string(kind_name(irr.kind))},
                   {"witness_primes", Json::array()},
                   {"witness_patterns", pattern_json(irr.witnesses)},
                   {"scanned", pattern_json(irr.scanned)},
                   {"factor", irr.factor ? rational_list(*irr.factor) : Json(nullptr)},
                   {"cyclotomic_remainder", irr.cyclotomic_remainder.str()},
                   {"cyclotomic_remainder_matches_closed_form", cert.cyclotomic_remainder_matches}};
  for (const auto& w : irr.witnesses) irreducible["witness_primes"].push_back(w.prime);

  Json totally_real = nullptr;
  if (cert.totally_real)
    totally_real = Json{{"verdict", cert.totally_real->verdict},
                        {"sturm_count", cert.totally_real->sturm_count},
                        {"disc_sign_positive", cert.totally_real->disc_sign_positive},
                        {"delta_matches_closed_form", cert.totally_real->delta_matches_closed_form}};

  Json doc{{"param", param},
           {"degenerate", pd.degenerate()},
           {"degenerate_cube_ok", opt(cert.degenerate_cube_ok)},
           {"irreducible", irreducible},
           {"six_roots_ok", opt(cert.six_roots_ok)},
           {"fermat_ok", opt(cert.fermat_ok)},
           {"conic_ok", opt(cert.conic_ok)},
           {"parameter_recovery_ok", opt(cert.parameter_recovery_ok)},
           {"resultant_identity_ok", cert.resultant_identity_ok},
           {"totally_real", totally_real},
           {"galois_s3", opt(cert.galois_s3)},
           {"quadratic_discriminant", cert.quadratic_discriminant.str()},
           {"quad_kernel", signed_str(cert.quad_kernel)},
           {"failures", cert.failures},
           {"points", nullptr}};
  if (cert.points) {
    Json pts = Json::array();
    for (const auto& pt : *cert.points)
      pts.push_back(Json{{"x_lo", pt.x_interval.lo.str()},
                         {"x_hi", pt.x_interval.hi.str()},
                         {"x_mid", pt.x_mid.str()},
                         {"y_mid", pt.y_mid.str()},
                         {"y_error_bound", pt.y_error_bound.str()}});
    doc["points"] = pts;
  }
  return doc;
}

SearchResult search_distinct_fields(unsigned height_bound) {
  SearchResult result;
  for (const auto& t : admissible_parameters(height_bound)) {
    SearchEntry entry{t, 0, false, certify(t)};
    entry.kernel = entry.certificate.quad_kernel;
    if (std::find(result.distinct_kernels.begin(), result.distinct_kernels.end(), entry.kernel) ==
        result.distinct_kernels.end()) {
      result.distinct_kernels.push_back(entry.kernel);
      entry.new_kernel = true;
    }
    result.entries.push_back(std::move(entry));
  }
  return result;
}

std::vector<std::string> points_csv_rows(const Rational& t, const std::vector<NumericPoint>& points) {
  std::vector<std::string> rows;
  for (size_t i = 0; i < points.size(); ++i) {
    const auto& pt = points[i];
    rows.push_back(t.str() + "," + std::to_string(i) + "," + pt.x_interval.lo.str() + "," + pt.x_interval.hi.str() +
                   "," + pt.x_mid.str() + "," + pt.y_mid.str());
  }
  return rows;
}

}  // namespace fermat5
