#pragma once

// Exact rational scalar used for every translate coordinate.
//
// Values are always stored reduced with a positive denominator, so equality
// is structural and the textual form "p/q" (or "p" when q == 1) is unique.

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

namespace cubetile {

class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(int value) : value_(value) {}   // NOLINT(google-explicit-constructor)
  Rational(const mpz_class& num, const mpz_class& den);
  Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}
  explicit Rational(mpq_class value);

  /// Parses "p/q" or "p" with optional leading sign. Throws ParseError.
  static Rational parse(std::string_view text);

  [[nodiscard]] std::string to_string() const;
  [[nodiscard]] double to_double() const { return value_.get_d(); }

  [[nodiscard]] const mpz_class& num() const { return value_.get_num(); }
  [[nodiscard]] const mpz_class& den() const { return value_.get_den(); }

  [[nodiscard]] bool is_zero() const { return sgn(value_) == 0; }
  [[nodiscard]] bool is_integer() const { return value_.get_den() == 1; }
  [[nodiscard]] int sign() const { return sgn(value_); }

  /// Largest integer not above the value.
  [[nodiscard]] mpz_class floor() const;
  /// value - floor(value), always in [0, 1).
  [[nodiscard]] Rational frac() const;
  [[nodiscard]] Rational abs() const;

  /// Exact conversion for integral values that fit in int64; throws otherwise.
  [[nodiscard]] std::int64_t to_int64() const;

  [[nodiscard]] const mpq_class& raw() const { return value_; }

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.value_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class value_;
};

/// Least common multiple of two positive integers.
mpz_class lcm(const mpz_class& a, const mpz_class& b);

struct RationalHash {
  std::size_t operator()(const Rational& r) const noexcept;
};

}  // namespace cubetile
