#pragma once

#include "jtvo/poly.hpp"

#include <map>
#include <utility>

namespace jtvo {

// Finite Laurent polynomial in one formal variable u with polynomial
// coefficients.
class Laurent {
public:
  Laurent() = default;
  static Laurent monomial(int exponent, Poly c) {
    Laurent out;
    out.add(exponent, std::move(c));
    return out;
  }

  void add(int exponent, const Poly& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(exponent, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  Poly coefficient(int exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? Poly{} : it->second;
  }

  const std::map<int, Poly>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  // Multiplication by u^n.
  Laurent shifted(int n) const {
    Laurent out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(e + n, c);
    return out;
  }

  // u -> -u
  Laurent negated_variable() const {
    Laurent out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, e % 2 == 0 ? c : -c);
    return out;
  }

  Laurent& operator+=(const Laurent& other) {
    for (const auto& [e, c] : other.terms_) add(e, c);
    return *this;
  }
  Laurent& operator-=(const Laurent& other) {
    for (const auto& [e, c] : other.terms_) add(e, -c);
    return *this;
  }
  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  friend Laurent operator*(const Laurent& a, const Laurent& b) {
    Laurent out;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) out.add(ea + eb, ca * cb);
    return out;
  }
  friend Laurent operator*(const Poly& c, const Laurent& a) {
    Laurent out;
    for (const auto& [e, x] : a.terms_) out.add(e, c * x);
    return out;
  }

private:
  std::map<int, Poly> terms_;
};

inline Laurent pow(const Laurent& base, unsigned n) {
  Laurent out = Laurent::monomial(0, Poly(1));
  for (unsigned i = 0; i < n; ++i) out = out * base;
  return out;
}

}  // namespace jtvo
