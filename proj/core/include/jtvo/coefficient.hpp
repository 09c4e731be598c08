#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <ostream>
#include <string>
#include <string_view>

namespace jtvo {

// Exact rational number, always in lowest terms with a positive
// denominator. Zero is 0/1.
class Coefficient {
public:
  Coefficient() = default;

  template <std::integral I>
  Coefficient(I value) : value_(static_cast<long>(value)) {}  // NOLINT: implicit by design of a numeric type

  Coefficient(long numerator, long denominator);
  explicit Coefficient(mpq_class value);

  // Accepts "p" or "p/q" with an optional leading sign; q must be nonzero.
  static Coefficient parse(std::string_view text);

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_one() const { return value_ == 1; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  std::string numerator() const { return value_.get_num().get_str(); }
  std::string denominator() const { return value_.get_den().get_str(); }

  // "p/q" form, used by every machine-readable rendering.
  std::string fraction() const;
  // "p" when integral, otherwise "p/q".
  std::string to_string() const;

  const mpq_class& value() const { return value_; }

  Coefficient operator-() const;
  Coefficient abs() const;
  Coefficient& operator+=(const Coefficient& other);
  Coefficient& operator-=(const Coefficient& other);
  Coefficient& operator*=(const Coefficient& other);
  Coefficient& operator/=(const Coefficient& other);

  friend Coefficient operator+(Coefficient a, const Coefficient& b) { return a += b; }
  friend Coefficient operator-(Coefficient a, const Coefficient& b) { return a -= b; }
  friend Coefficient operator*(Coefficient a, const Coefficient& b) { return a *= b; }
  friend Coefficient operator/(Coefficient a, const Coefficient& b) { return a /= b; }

  friend bool operator==(const Coefficient& a, const Coefficient& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Coefficient& a, const Coefficient& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Coefficient& c) { return os << c.to_string(); }

private:
  mpq_class value_;
};

// (-1)^n as a small integer.
constexpr int sign_power(long n) { return (n % 2 == 0) ? 1 : -1; }

}  // namespace jtvo
