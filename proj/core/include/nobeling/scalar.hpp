#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace nobeling {

/// Exact rational number, always in lowest terms with a positive denominator.
///
/// Thin value wrapper over GMP's mpq_class. Every quantity the library
/// certifies (coordinates, tolerances, distances, products) is a Scalar, so
/// comparisons in certificates are exact.
class Scalar {
 public:
  Scalar() = default;
  Scalar(int v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  Scalar(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  Scalar(long long v);       // NOLINT(google-explicit-constructor)
  Scalar(long num, long den);
  explicit Scalar(const mpz_class& v) : q_(v) {}
  Scalar(const mpz_class& num, const mpz_class& den);
  explicit Scalar(mpq_class q);

  /// Parses "n" or "n/d" (optional leading '-'). Decimals are rejected.
  static Scalar parse(std::string_view text);

  /// Power of two with an integer exponent, e.g. pow2(-3) == 1/8.
  static Scalar pow2(long exponent);

  mpz_class numerator() const { return q_.get_num(); }
  mpz_class denominator() const { return q_.get_den(); }
  const mpq_class& raw() const { return q_; }

  int sign() const { return sgn(q_); }
  bool is_zero() const { return sign() == 0; }
  Scalar abs() const;

  /// Largest integer <= this.
  mpz_class floor() const;

  /// Canonical "num/den" form; the denominator is always written.
  std::string str() const;

  /// Decimal rendering truncated toward zero at `digits` fractional digits.
  /// Lossy; for plotting and display only.
  std::string to_decimal(unsigned digits) const;
  double to_double() const { return q_.get_d(); }

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  /// Throws std::domain_error on division by zero.
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  Scalar operator-() const;

  friend bool operator==(const Scalar& a, const Scalar& b) { return cmp(a.q_, b.q_) == 0; }
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

 private:
  mpq_class q_;
};

Scalar min(const Scalar& a, const Scalar& b);
Scalar max(const Scalar& a, const Scalar& b);

/// Height of a rational p/q in lowest terms: max(|p|, q).
mpz_class height(const Scalar& s);

}  // namespace nobeling
