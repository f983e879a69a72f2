#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "fermat5/quintic.hpp"

namespace fermat5 {

// Verification record for one parameter t. Optional fields are absent when a
// check does not apply (t = 1) or was not requested (points).
struct Certificate {
  ParamData param;
  IrreducibilityVerdict irreducible;
  bool cyclotomic_remainder_matches = false;
  std::optional<bool> six_roots_ok;
  std::optional<bool> fermat_ok;
  std::optional<bool> conic_ok;
  std::optional<bool> parameter_recovery_ok;
  bool resultant_identity_ok = false;
  std::optional<TotallyRealVerdict> totally_real;
  std::optional<bool> galois_s3;
  Rational quadratic_discriminant;
  BigInt quad_kernel;
  std::optional<bool> degenerate_cube_ok;  // t = 1 only: f_1 = (X^2+X+1)^3
  std::vector<std::string> failures;
  std::optional<std::vector<NumericPoint>> points;

  // Every applicable check passed.
  bool ok() const { return failures.empty(); }
};

// Runs the full pipeline. Throws DegenerateParameter for t = 2; never throws
// for failed checks, which are listed in `failures` instead.
Certificate certify(const Rational& t, std::optional<Rational> point_precision = std::nullopt);

nlohmann::ordered_json to_json(const Certificate& cert);

// "+753", "-2"
std::string signed_str(const BigInt& n);

struct SearchEntry {
  Rational t;
  BigInt kernel;
  bool new_kernel = false;  // first parameter with this kernel
  Certificate certificate;
};

struct SearchResult {
  std::vector<SearchEntry> entries;  // ascending t
  std::vector<BigInt> distinct_kernels;
};

// Certifies every admissible t with denominator <= height_bound and groups
// them by quadratic-subfield kernel. Distinct kernels certify distinct K_t.
SearchResult search_distinct_fields(unsigned height_bound);

inline constexpr const char* kPointsCsvHeader = "t,root_index,x_lo,x_hi,x_mid,y_mid";
std::vector<std::string> points_csv_rows(const Rational& t, const std::vector<NumericPoint>& points);

}  // namespace fermat5
