#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include "galorb/error.hpp"

namespace galorb {

/**
 * Exact rational number backed by GMP.
 *
 * Always held in canonical form (reduced, positive denominator). Division by
 * zero throws instead of trapping.
 */
class Rational {
 public:
  Rational() = default;
  Rational(int v) : v_(v) {}
  Rational(long v) : v_(v) {}
  Rational(long long v) : v_(mpz_class(std::to_string(v))) {}
  Rational(long num, long den) {
    if (den == 0) fail(ErrorCode::InvalidArgument, "zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }
  explicit Rational(const mpz_class& z) : v_(z) {}
  explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

  /// Parses "p", "-p" or "p/q". Rejects anything else, including q = 0.
  static Rational parse(std::string_view s) {
    std::size_t i = 0;
    auto digits = [&](std::size_t from) {
      std::size_t j = from;
      while (j < s.size() && s[j] >= '0' && s[j] <= '9') ++j;
      return j;
    };
    if (i < s.size() && s[i] == '-') ++i;
    std::size_t end_num = digits(i);
    if (end_num == i) fail(ErrorCode::Parse, "invalid rational '" + std::string(s) + "'");
    std::string num(s.substr(0, end_num));
    std::string den = "1";
    if (end_num < s.size()) {
      if (s[end_num] != '/') fail(ErrorCode::Parse, "invalid rational '" + std::string(s) + "'");
      std::size_t end_den = digits(end_num + 1);
      if (end_den == end_num + 1 || end_den != s.size())
        fail(ErrorCode::Parse, "invalid rational '" + std::string(s) + "'");
      den = std::string(s.substr(end_num + 1));
    }
    mpz_class d(den);
    if (d == 0) fail(ErrorCode::Parse, "invalid rational '" + std::string(s) + "' (zero denominator)");
    return Rational(mpq_class(mpz_class(num), d));
  }

  std::string str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
  }

  const mpq_class& gmp() const { return v_; }
  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }

  int sign() const { return sgn(v_); }
  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) fail(ErrorCode::InvalidArgument, "division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  mpq_class v_;
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

/// Largest integer not exceeding r.
inline mpz_class floor(const Rational& r) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), r.num().get_mpz_t(), r.den().get_mpz_t());
  return q;
}

inline mpz_class ceil(const Rational& r) {
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), r.num().get_mpz_t(), r.den().get_mpz_t());
  return q;
}

/// Exact square root when r is the square of a rational; sets ok accordingly.
inline Rational sqrt_exact(const Rational& r, bool& ok) {
  ok = false;
  if (r.sign() < 0) return Rational();
  mpz_class n = r.num(), d = r.den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return Rational();
  mpz_class sn, sd;
  mpz_sqrt(sn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(sd.get_mpz_t(), d.get_mpz_t());
  ok = true;
  return Rational(mpq_class(sn, sd));
}

}  // namespace galorb
