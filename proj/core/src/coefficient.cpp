#include "jtvo/coefficient.hpp"

#include "jtvo/errors.hpp"

#include <cctype>

namespace jtvo {

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

mpz_class parse_integer(std::string_view s) {
  if (s.front() == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

}  // namespace

Coefficient::Coefficient(long numerator, long denominator) {
  if (denominator == 0) throw DomainError("zero denominator");
  value_ = mpq_class(mpz_class(numerator), mpz_class(denominator));
  value_.canonicalize();
}

Coefficient::Coefficient(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Coefficient Coefficient::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  if (!is_integer_literal(num)) throw ParseError("malformed coefficient '" + std::string(text) + "'");
  if (slash == std::string_view::npos) return Coefficient(mpq_class(parse_integer(num)));
  const std::string_view den = text.substr(slash + 1);
  if (!is_integer_literal(den) || den.front() == '-' || den.front() == '+')
    throw ParseError("malformed coefficient '" + std::string(text) + "'");
  mpz_class d = parse_integer(den);
  if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  return Coefficient(mpq_class(parse_integer(num), d));
}

std::string Coefficient::fraction() const { return numerator() + "/" + denominator(); }

std::string Coefficient::to_string() const { return is_integer() ? numerator() : fraction(); }

Coefficient Coefficient::operator-() const {
  Coefficient r;
  r.value_ = -value_;
  return r;
}

Coefficient Coefficient::abs() const {
  Coefficient r;
  r.value_ = ::abs(value_);
  return r;
}

Coefficient& Coefficient::operator+=(const Coefficient& other) {
  value_ += other.value_;
  return *this;
}

Coefficient& Coefficient::operator-=(const Coefficient& other) {
  value_ -= other.value_;
  return *this;
}

Coefficient& Coefficient::operator*=(const Coefficient& other) {
  value_ *= other.value_;
  return *this;
}

Coefficient& Coefficient::operator/=(const Coefficient& other) {
  if (other.is_zero()) throw DomainError("division by zero coefficient");
  value_ /= other.value_;
  return *this;
}

}  // namespace jtvo
