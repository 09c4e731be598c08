#pragma once

#include "jtvo/coefficient.hpp"
#include "jtvo/poly.hpp"

#include <functional>
#include <map>
#include <memory>
#include <shared_mutex>
#include <string>
#include <utility>
#include <vector>

namespace jtvo {

enum class FamilyKind { Classical, LieCharacter, Shifted, LinearRecurrence };

// a_i(k) for 0 <= i <= order: coefficient of h^(p-1)_{k-i} in h^(p)_k.
// The leading coefficient a_{-1} is fixed to 1.
using RecurrenceCoefficientFn = std::function<Coefficient(int i, int k)>;

class GeneratorFamily;
using FamilyPtr = std::shared_ptr<const GeneratorFamily>;

// Supplier of the generalized complete functions h^(r)_k as polynomials in
// the base generators h^(0)_k, k >= 1. Every family satisfies
//   h^(k)_{-k} = 1,   h^(r)_k = 0 for k + r < 0,   deg h^(r)_k <= k + r.
// Values are memoized per (r, k); the cache is safe for concurrent use and
// inserts are idempotent.
class GeneratorFamily {
  struct Token {};

public:
  // h^(p)_k = h_{k+p}
  static FamilyPtr classical();
  // h^(r)_a = J_{a+r} + J_{a-r} for r > 0, J_{a+r} for r <= 0
  static FamilyPtr lie_character();
  // h^(r)_k = phi^r(h*_{k+r}) with phi(h*_k) = h*_k + (k-1) h*_{k-1}
  static FamilyPtr shifted();
  // h^(p)_k = sum_{i=-1}^{l} a_i h^(p-1)_{k-i}, a_{-1} = 1, given a_0..a_l.
  static FamilyPtr linear_recurrence(std::vector<Coefficient> coeffs);
  // Same recursion with subscript-dependent coefficients a_i(k), i = 0..order.
  static FamilyPtr linear_recurrence(std::string name, int order, RecurrenceCoefficientFn coeffs);

  GeneratorFamily(Token, FamilyKind kind, std::string name, Tag base_tag);

  FamilyKind kind() const { return kind_; }
  const std::string& name() const { return name_; }
  Tag base_tag() const { return base_tag_; }

  // h^(0)_k: the base generator for k >= 1, 1 for k = 0, 0 below.
  Poly base(int k) const;
  Poly h(int r, int k) const;

  bool has_constant_coefficients() const { return kind_ == FamilyKind::LinearRecurrence && !coefficient_fn_; }
  // a_0..a_l of a constant-coefficient linear recurrence.
  const std::vector<Coefficient>& recurrence_coefficients() const;
  int recurrence_order() const { return order_; }

private:
  Poly compute(int r, int k) const;
  Coefficient recurrence_coefficient(int i, int k) const;

  FamilyKind kind_;
  std::string name_;
  Tag base_tag_;
  int order_ = -1;
  std::vector<Coefficient> coeffs_;
  RecurrenceCoefficientFn coefficient_fn_;

  mutable std::shared_mutex mutex_;
  mutable std::map<std::pair<int, int>, Poly> cache_;
};

// The automorphism phi of the shifted generator ring and its inverse.
// Throw DomainError on polynomials involving other generators.
Poly shifted_phi(const Poly& p);
Poly shifted_phi_inverse(const Poly& p);
// phi^n for any integer n.
Poly shifted_phi_power(const Poly& p, int n);

// J_a with J_0 = 1 and J_a = 0 for a < 0.
Poly lie_j(int a);
// K_p = det[J_{1-i+j}]_{p x p}; K_0 = 1, K_p = 0 for p < 0.
Poly lie_k_coefficient(int p);

}  // namespace jtvo
