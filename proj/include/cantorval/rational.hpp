#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace cantorval {

/// Arbitrary-precision rational number, always kept in lowest terms with a
/// positive denominator.
///
/// Thin value wrapper over GMP's mpq_class so that expression templates do not
/// leak into the rest of the library.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : q_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(long numerator, long denominator);
  explicit Rational(const mpz_class& integer) : q_(integer) {}
  Rational(const mpz_class& numerator, const mpz_class& denominator);
  explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

  /// Parses "p/q", "p" or "-p/q". Throws PreconditionError on malformed input
  /// or a zero denominator.
  static Rational parse(std::string_view text);

  /// Renders "p/q" in lowest terms, or "p" when the denominator is 1.
  std::string str() const;

  mpz_class numerator() const { return q_.get_num(); }
  mpz_class denominator() const { return q_.get_den(); }
  const mpq_class& raw() const { return q_; }

  int sign() const { return sgn(q_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return q_.get_den() == 1; }

  // Presentation only; never used inside exact computations.
  double to_double() const { return q_.get_d(); }

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class q_;
};

Rational abs(const Rational& x);
Rational min(const Rational& a, const Rational& b);
Rational max(const Rational& a, const Rational& b);

/// base^exponent for a possibly negative integer exponent (base != 0 when
/// exponent < 0).
Rational pow(const Rational& base, long exponent);

/// 1 / 4^n, the natural scale of the base-4 constructions.
Rational quarter_pow(unsigned n);

/// Midpoint of a and b.
Rational midpoint(const Rational& a, const Rational& b);

std::ostream& operator<<(std::ostream& os, const Rational& x);

/// Fixed-point decimal rendering with `places` digits after the point,
/// rounded half away from zero. Used only when rendering figures.
std::string to_fixed(const Rational& x, unsigned places);

}  // namespace cantorval
