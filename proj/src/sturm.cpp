#include <algorithm>

#include "fermat5/error.hpp"
#include "fermat5/roots.hpp"

namespace fermat5 {

namespace {

int count_variations(const std::vector<int>& signs) {
  int v = 0, last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

void require_squarefree(const PolyQ& p) {
  if (p.is_zero()) throw MathError(Errc::ZeroPolynomial, "Sturm chain of 0");
  if (!is_squarefree(p)) throw MathError(Errc::NotSquarefree, "polynomial has a repeated factor: " + p.pretty());
}

}  // namespace

int SturmChain::variations_at(const Rational& x) const {
  std::vector<int> s;
  s.reserve(entries.size());
  for (const auto& e : entries) s.push_back(e.sign_at(x));
  return count_variations(s);
}

int SturmChain::variations_at_pos_inf() const {
  std::vector<int> s;
  for (const auto& e : entries) s.push_back(e.leading().sign());
  return count_variations(s);
}

int SturmChain::variations_at_neg_inf() const {
  std::vector<int> s;
  for (const auto& e : entries) s.push_back(e.degree() % 2 == 0 ? e.leading().sign() : -e.leading().sign());
  return count_variations(s);
}

SturmChain sturm_chain(const PolyQ& p) {
  require_squarefree(p);
  SturmChain chain;
  chain.entries.push_back(p);
  PolyQ d = p.derivative();
  if (d.is_zero()) return chain;
  chain.entries.push_back(d);
  PolyQ a = primitive_part(p), b = primitive_part(d);
  while (true) {
    PolyQ r = -(a % b);
    if (r.is_zero()) break;
    r = primitive_part(r);
    chain.entries.push_back(r);
    a = std::move(b);
    b = std::move(r);
  }
  return chain;
}

int sturm_count(const PolyQ& p, const std::optional<Rational>& lo, const std::optional<Rational>& hi) {
  if (lo && hi && *lo >= *hi) throw MathError(Errc::InvalidInterval, "sturm_count needs lo < hi");
  SturmChain chain = sturm_chain(p);
  int v_lo = lo ? chain.variations_at(*lo) : chain.variations_at_neg_inf();
  int v_hi = hi ? chain.variations_at(*hi) : chain.variations_at_pos_inf();
  return v_lo - v_hi;
}

Rational cauchy_bound(const PolyQ& p) {
  Rational lc = p.leading().abs();
  Rational m;
  for (int i = 0; i < p.degree(); ++i) m = std::max(m, p.coeff(i).abs());
  return Rational(1) + m / lc;
}

namespace {

// A point strictly inside (lo, hi) that is not a root of p.
Rational split_point(const PolyQ& p, const Rational& lo, const Rational& hi) {
  Rational mid = (lo + hi) / Rational(2);
  for (long k = 3; p(mid).is_zero(); ++k) mid = lo + (hi - lo) / Rational(k);
  return mid;
}

void bisect(const PolyQ& p, const SturmChain& chain, const Rational& lo, int v_lo, const Rational& hi, int v_hi,
            std::vector<IsolatingInterval>& out) {
  int count = v_lo - v_hi;
  if (count == 0) return;
  if (count == 1) {
    out.push_back({lo, hi, p});
    return;
  }
  Rational mid = split_point(p, lo, hi);
  int v_mid = chain.variations_at(mid);
  bisect(p, chain, lo, v_lo, mid, v_mid, out);
  bisect(p, chain, mid, v_mid, hi, v_hi, out);
}

}  // namespace

std::vector<IsolatingInterval> isolate_real_roots(const PolyQ& p) {
  SturmChain chain = sturm_chain(p);
  std::vector<IsolatingInterval> out;
  if (p.degree() < 1) return out;
  Rational bound = cauchy_bound(p);
  bisect(p, chain, -bound, chain.variations_at(-bound), bound, chain.variations_at(bound), out);
  return out;
}

IsolatingInterval refine(const IsolatingInterval& interval, const Rational& width) {
  if (width.sign() <= 0) throw MathError(Errc::InvalidInterval, "refine width must be positive");
  if (interval.lo >= interval.hi) throw MathError(Errc::InvalidInterval, "interval needs lo < hi");
  const PolyQ& p = interval.target;
  int s_lo = p.sign_at(interval.lo);
  int s_hi = p.sign_at(interval.hi);
  if (s_lo == 0 || s_lo * s_hi > 0)
    throw MathError(Errc::InvalidInterval, "interval does not bracket a root of " + p.pretty());
  IsolatingInterval cur = interval;
  if (s_hi == 0) {
    // The root is hi itself.
    if (cur.width() > width) cur.lo = cur.hi - width;
    return cur;
  }
  while (cur.width() > width) {
    Rational mid = cur.midpoint();
    int s = p.sign_at(mid);
    if (s == 0) {
      cur.hi = mid;
      cur.lo = std::max(cur.lo, mid - width);
      break;
    }
    if (s == s_lo)
      cur.lo = mid;
    else
      cur.hi = mid;
  }
  return cur;
}

}  // namespace fermat5
