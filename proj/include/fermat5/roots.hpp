#pragma once

#include <optional>
#include <vector>

#include "fermat5/polyq.hpp"

namespace fermat5 {

// Signed remainder sequence p, p', -rem(p, p'), ... Entries after the first
// two are rescaled by positive rationals to primitive integer form.
struct SturmChain {
  std::vector<PolyQ> entries;

  // Sign variations at x (zeros skipped).
  int variations_at(const Rational& x) const;
  int variations_at_pos_inf() const;
  int variations_at_neg_inf() const;
};

// Throws NotSquarefree (or ZeroPolynomial for p = 0).
SturmChain sturm_chain(const PolyQ& p);

// Number of real roots in (lo, hi]. A missing bound stands for -inf / +inf.
// Throws NotSquarefree, InvalidInterval when lo >= hi.
int sturm_count(const PolyQ& p, const std::optional<Rational>& lo = std::nullopt,
                const std::optional<Rational>& hi = std::nullopt);

// Exactly one real root of target lies in (lo, hi].
struct IsolatingInterval {
  Rational lo;
  Rational hi;
  PolyQ target;

  Rational width() const { return hi - lo; }
  Rational midpoint() const { return (lo + hi) / Rational(2); }
};

// 1 + max|a_i| / |a_d|; every root lies strictly inside (-bound, bound).
Rational cauchy_bound(const PolyQ& p);

// One interval per real root, ascending and pairwise disjoint; endpoints are
// never roots. Throws NotSquarefree.
std::vector<IsolatingInterval> isolate_real_roots(const PolyQ& p);

// Bisect until hi - lo <= width. Returns the input unchanged when it is
// already narrow enough. Throws InvalidInterval if the input does not
// bracket its root.
IsolatingInterval refine(const IsolatingInterval& interval, const Rational& width);

}  // namespace fermat5
