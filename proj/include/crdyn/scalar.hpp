#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace crdyn {

/// Exact rational number, always kept in lowest terms with a positive
/// denominator. Backed by GMP.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Scalar(long numerator, long denominator);

  /// Accepts "p" or "p/q" with an optional sign; anything else (decimals,
  /// exponents, whitespace, zero denominators) is rejected.
  static std::optional<Scalar> parse(std::string_view text);

  /// 2^-m.
  static Scalar inverse_power_of_two(std::size_t m);

  std::string numerator() const { return value_.get_num().get_str(); }
  std::string denominator() const { return value_.get_den().get_str(); }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  /// "p/q" with the denominator always written, e.g. "1/1", "-3/4".
  std::string to_string() const;

  friend Scalar operator+(const Scalar& a, const Scalar& b) { return Scalar(mpq_class(a.value_ + b.value_)); }
  friend Scalar operator-(const Scalar& a, const Scalar& b) { return Scalar(mpq_class(a.value_ - b.value_)); }
  friend Scalar operator*(const Scalar& a, const Scalar& b) { return Scalar(mpq_class(a.value_ * b.value_)); }
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar operator-() const { return Scalar(mpq_class(-value_)); }

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

 private:
  explicit Scalar(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

  mpq_class value_;
};

inline Scalar abs(const Scalar& s) { return s.sign() < 0 ? -s : s; }
inline Scalar midpoint(const Scalar& a, const Scalar& b) { return (a + b) / Scalar(2); }

}  // namespace crdyn
