#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "galorb/rational.hpp"

namespace galorb {

/// Univariate polynomial over the rationals, coefficients low to high, no trailing zeros.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> c) : c_(std::move(c)) { trim(); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational lead() const { return c_.empty() ? Rational() : c_.back(); }

  Rational operator()(const Rational& x) const {
    Rational r;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
  }

  Poly derivative() const {
    std::vector<Rational> d;
    for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * Rational(static_cast<long>(i)));
    return Poly(d);
  }

  Poly monic() const {
    if (c_.empty()) return *this;
    std::vector<Rational> d = c_;
    Rational l = lead();
    for (auto& x : d) x /= l;
    return Poly(d);
  }

  /// Quotient and remainder of Euclidean division by b (b nonzero).
  std::pair<Poly, Poly> divmod(const Poly& b) const {
    if (b.is_zero()) fail(ErrorCode::InvalidArgument, "polynomial division by zero");
    std::vector<Rational> r = c_;
    int db = b.degree();
    std::vector<Rational> q(degree() >= db ? degree() - db + 1 : 0);
    for (int k = degree() - db; k >= 0; --k) {
      Rational f = r[k + db] / b.lead();
      q[k] = f;
      for (int j = 0; j <= db; ++j) r[k + j] -= f * b.c_[j];
    }
    return {Poly(q), Poly(r)};
  }

  friend Poly operator-(const Poly& a) {
    std::vector<Rational> d = a.c_;
    for (auto& x : d) x = -x;
    return Poly(d);
  }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<Rational> c_;
};

inline Poly gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// Number of sign changes of the Sturm chain at x.
inline int sturm_variations(const std::vector<Poly>& chain, const Rational& x) {
  int v = 0, last = 0;
  for (const auto& p : chain) {
    int s = p(x).sign();
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

/// Simplest rational (smallest denominator) in the closed interval [lo, hi], lo <= hi.
inline Rational simplest_between(const Rational& lo, const Rational& hi) {
  mpz_class c = ceil(lo);
  if (Rational(c) <= hi) {
    if (lo.sign() <= 0 && hi.sign() >= 0) return Rational(0);
    if (hi.sign() < 0) return Rational(floor(hi));
    return Rational(c);
  }
  mpz_class n = floor(lo);
  Rational nl = lo - Rational(n), nh = hi - Rational(n);
  Rational inner = simplest_between(Rational(1) / nh, Rational(1) / nl);
  return Rational(n) + Rational(1) / inner;
}

/**
 * All distinct rational roots of p, each with its multiplicity.
 *
 * Real roots of the square-free part are isolated with a Sturm chain until the
 * isolating interval is shorter than the minimal gap between rationals whose
 * denominators divide the integral leading coefficient; the simplest rational in
 * that interval is then the only possible rational root and is tested exactly.
 */
inline std::vector<std::pair<Rational, int>> rational_roots(const Poly& p) {
  std::vector<std::pair<Rational, int>> out;
  if (p.degree() <= 0) return out;
  Poly sf = p.divmod(gcd(p, p.derivative())).first.monic();

  // Integral primitive form of sf, to bound denominators of rational roots.
  mpz_class l = 1;
  for (const auto& c : sf.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.den().get_mpz_t());
  Rational lead_int = Rational(l);
  Rational gap = Rational(1) / (lead_int * lead_int);

  std::vector<Poly> chain{sf, sf.derivative()};
  while (chain.back().degree() > 0) {
    Poly r = chain[chain.size() - 2].divmod(chain.back()).second;
    if (r.is_zero()) break;
    chain.push_back(-r);
  }

  Rational bound = 1;
  for (int i = 0; i < sf.degree(); ++i) bound += abs(sf.coeffs()[i]);

  std::vector<std::pair<Rational, Rational>> work{{-bound, bound}};
  std::vector<Rational> found;
  while (!work.empty()) {
    auto [a, b] = work.back();
    work.pop_back();
    int count = sturm_variations(chain, a) - sturm_variations(chain, b);
    if (count == 0) continue;
    if (count == 1 && b - a < gap) {
      Rational s = simplest_between(a, b);
      if (sf(s).is_zero()) found.push_back(s);
      continue;
    }
    Rational m = (a + b) / Rational(2);
    if (sf(m).is_zero()) {
      found.push_back(m);
      // keep m out of both halves by nudging the split off the root
      Rational eps = (b - a) / Rational(1024);
      while (sturm_variations(chain, m - eps) - sturm_variations(chain, m + eps) != 1) eps /= Rational(2);
      work.push_back({a, m - eps});
      work.push_back({m + eps, b});
      continue;
    }
    work.push_back({a, m});
    work.push_back({m, b});
  }

  for (const auto& r : found) {
    int mult = 0;
    Poly q = p;
    Poly lin(std::vector<Rational>{-r, Rational(1)});
    for (;;) {
      auto [quo, rem] = q.divmod(lin);
      if (!rem.is_zero()) break;
      q = quo;
      ++mult;
    }
    out.push_back({r, mult});
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  return out;
}

}  // namespace galorb
