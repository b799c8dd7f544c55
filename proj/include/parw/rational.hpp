#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace parw {

// Exact rational number, always kept in lowest terms with a positive
// denominator. All arithmetic and comparisons are exact; there is no
// floating point anywhere in the library.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT: implicit on purpose
  Rational(long num, long den);

  // 2^k for any integer k, including negative k.
  static Rational pow2(long k);

  // Accepts "a" or "a/b" with optional sign; b must be nonzero.
  static std::optional<Rational> parse(std::string_view text);

  // Canonical rendering "num/den" (den >= 1, lowest terms), e.g. "0/1", "1/1".
  std::string str() const;

  bool is_zero() const { return sgn(v_) == 0; }
  int sign() const { return sgn(v_); }
  // Largest integer <= value.
  long floor_long() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.v_ == b.v_;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    int c = cmp(a.v_, b.v_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  // Internal value, exposed for the few routines that need raw GMP calls.
  const mpq_class& raw() const { return v_; }
  explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

 private:
  mpq_class v_;
};

// Smallest integer c >= 0 with value <= 2^c; requires value > 0.
long ceil_log2_at_least(const Rational& value);

}  // namespace parw
