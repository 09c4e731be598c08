#include "jtvo/family.hpp"

#include "jtvo/errors.hpp"
#include "jtvo/matrix.hpp"

#include <mutex>
#include <sstream>

namespace jtvo {

GeneratorFamily::GeneratorFamily(Token, FamilyKind kind, std::string name, Tag base_tag)
    : kind_(kind), name_(std::move(name)), base_tag_(base_tag) {}

FamilyPtr GeneratorFamily::classical() {
  static const FamilyPtr f = std::make_shared<GeneratorFamily>(Token{}, FamilyKind::Classical, "classical", Tag::h());
  return f;
}

FamilyPtr GeneratorFamily::lie_character() {
  static const FamilyPtr f = std::make_shared<GeneratorFamily>(Token{}, FamilyKind::LieCharacter, "lie", Tag::j());
  return f;
}

FamilyPtr GeneratorFamily::shifted() {
  static const FamilyPtr f = std::make_shared<GeneratorFamily>(Token{}, FamilyKind::Shifted, "shifted", Tag::hstar());
  return f;
}

FamilyPtr GeneratorFamily::linear_recurrence(std::vector<Coefficient> coeffs) {
  if (coeffs.empty()) throw DomainError("linear recurrence needs at least a_0");
  std::ostringstream name;
  name << "linrec[";
  for (std::size_t i = 0; i < coeffs.size(); ++i) name << (i ? "," : "") << coeffs[i].to_string();
  name << "]";
  auto f = std::make_shared<GeneratorFamily>(Token{}, FamilyKind::LinearRecurrence, name.str(), Tag::h());
  f->order_ = static_cast<int>(coeffs.size()) - 1;
  f->coeffs_ = std::move(coeffs);
  return f;
}

FamilyPtr GeneratorFamily::linear_recurrence(std::string name, int order, RecurrenceCoefficientFn coeffs) {
  if (order < 0) throw DomainError("linear recurrence order must be >= 0");
  if (!coeffs) throw DomainError("linear recurrence needs a coefficient function");
  auto f = std::make_shared<GeneratorFamily>(Token{}, FamilyKind::LinearRecurrence, std::move(name), Tag::h());
  f->order_ = order;
  f->coefficient_fn_ = std::move(coeffs);
  return f;
}

const std::vector<Coefficient>& GeneratorFamily::recurrence_coefficients() const {
  if (!has_constant_coefficients())
    throw UnsupportedFamily(name_ + " is not a constant-coefficient linear recurrence");
  return coeffs_;
}

Coefficient GeneratorFamily::recurrence_coefficient(int i, int k) const {
  return coefficient_fn_ ? coefficient_fn_(i, k) : coeffs_[static_cast<std::size_t>(i)];
}

Poly GeneratorFamily::base(int k) const {
  if (k < 0) return {};
  if (k == 0) return 1;
  return Poly::generator(GeneratorId(base_tag_, k));
}

Poly GeneratorFamily::h(int r, int k) const {
  const auto key = std::make_pair(r, k);
  {
    std::shared_lock lock(mutex_);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  }
  // Computed without holding the lock: compute() recurses into h().
  Poly value = compute(r, k);
  std::unique_lock lock(mutex_);
  return cache_.try_emplace(key, std::move(value)).first->second;
}

Poly GeneratorFamily::compute(int r, int k) const {
  if (r == 0) return base(k);
  switch (kind_) {
    case FamilyKind::Classical:
      return base(k + r);

    case FamilyKind::LieCharacter:
      return r > 0 ? lie_j(k + r) + lie_j(k - r) : lie_j(k + r);

    case FamilyKind::Shifted: {
      // With n = k + r:  phi^r(h*_n) = phi^{r-1}(h*_n) + (n-1) phi^{r-1}(h*_{n-1})
      // and, read backwards, phi^r(h*_n) = phi^{r+1}(h*_n) - (n-1) phi^r(h*_{n-1}).
      const int n = k + r;
      if (n < 0) return {};
      if (n == 0) return 1;
      if (r > 0) return h(r - 1, k + 1) + Coefficient(n - 1) * h(r - 1, k);
      return h(r + 1, k - 1) - Coefficient(n - 1) * h(r, k - 1);
    }

    case FamilyKind::LinearRecurrence: {
      if (r > 0) {
        Poly acc = h(r - 1, k + 1);
        for (int i = 0; i <= order_; ++i) {
          const Coefficient a = recurrence_coefficient(i, k);
          if (!a.is_zero()) acc += a * h(r - 1, k - i);
        }
        return acc;
      }
      // Descending step: solve h^(r+1)_{k-1} = h^(r)_k + sum_{i>=0} a_i(k-1) h^(r)_{k-1-i}
      // for h^(r)_k, by induction upward from h^(r)_{-r} = 1.
      if (k + r < 0) return {};
      if (k + r == 0) return 1;
      Poly acc = h(r + 1, k - 1);
      for (int i = 0; i <= order_; ++i) {
        const Coefficient a = recurrence_coefficient(i, k - 1);
        if (!a.is_zero()) acc -= a * h(r, k - 1 - i);
      }
      return acc;
    }
  }
  return {};
}

// ---------------------------------------------------------------- shifted phi

namespace {

void require_shifted(const Poly& p) {
  if (!p.only_uses(Tag::hstar())) throw DomainError("phi is defined on the h* generator ring only");
}

Poly hstar(int k) { return GeneratorFamily::shifted()->base(k); }

}  // namespace

Poly shifted_phi(const Poly& p) {
  require_shifted(p);
  return p.substitute([](const GeneratorId& g) {
    return hstar(g.index) + Coefficient(g.index - 1) * hstar(g.index - 1);
  });
}

namespace {

// phi^{-1}(h*_k) = h*_k - (k-1) phi^{-1}(h*_{k-1}), phi^{-1}(h*_0) = 1.
Poly phi_inverse_generator(int k) {
  static std::mutex mutex;
  static std::map<int, Poly> cache;
  if (k < 0) return {};
  if (k == 0) return 1;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(k); it != cache.end()) return it->second;
  }
  Poly value = hstar(k) - Coefficient(k - 1) * phi_inverse_generator(k - 1);
  std::lock_guard lock(mutex);
  return cache.try_emplace(k, std::move(value)).first->second;
}

}  // namespace

Poly shifted_phi_inverse(const Poly& p) {
  require_shifted(p);
  return p.substitute([](const GeneratorId& g) { return phi_inverse_generator(g.index); });
}

Poly shifted_phi_power(const Poly& p, int n) {
  Poly out = p;
  for (int i = 0; i < n; ++i) out = shifted_phi(out);
  for (int i = 0; i > n; --i) out = shifted_phi_inverse(out);
  if (n == 0) require_shifted(p);
  return out;
}

// ---------------------------------------------------------------- Lie characters

Poly lie_j(int a) { return GeneratorFamily::lie_character()->base(a); }

Poly lie_k_coefficient(int p) {
  if (p < 0) return {};
  if (p == 0) return 1;
  const auto n = static_cast<std::size_t>(p);
  return det(PolyMatrix::generate(n, n, [](std::size_t i, std::size_t j) {
    return lie_j(1 - static_cast<int>(i) + static_cast<int>(j));
  }));
}

}  // namespace jtvo
