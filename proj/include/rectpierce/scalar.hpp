#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace rectpierce {

/// Exact rational number, always kept in lowest terms with a positive
/// denominator. Every coordinate and length in the library is a Scalar.
class Scalar {
 public:
  Scalar() = default;
  Scalar(std::int64_t value);  // NOLINT(google-explicit-constructor)
  Scalar(std::int64_t num, std::int64_t den);
  explicit Scalar(mpq_class value);

  /// Parses "p" or "p/q" where p is a signed integer and q an unsigned one.
  /// Throws std::invalid_argument on malformed text or a zero denominator.
  static Scalar parse(std::string_view text);

  /// "p" when the value is an integer, "p/q" otherwise.
  std::string to_string() const;

  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }
  bool is_integer() const;
  bool fits_int64() const;
  std::int64_t to_int64() const;

  /// Smallest integer not below the value. Throws std::overflow_error if it
  /// does not fit in 64 bits.
  std::int64_t ceil() const;
  std::int64_t floor() const;

  /// Lossy; reserved for rendering and reporting.
  double to_double() const { return value_.get_d(); }

  const mpq_class& raw() const { return value_; }

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  Scalar operator-() const;

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b);

 private:
  mpq_class value_;
};

inline const Scalar& min(const Scalar& a, const Scalar& b) { return b < a ? b : a; }
inline const Scalar& max(const Scalar& a, const Scalar& b) { return a < b ? b : a; }

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace rectpierce
