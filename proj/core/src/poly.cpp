#include "jtvo/poly.hpp"

#include "jtvo/errors.hpp"

#include <algorithm>
#include <sstream>

namespace jtvo {

// ---------------------------------------------------------------- Tag

Tag::Tag(std::string_view name) {
  if (name.empty() || name.size() > 8) throw DomainError("generator tag must have 1..8 characters");
  for (std::size_t i = 0; i < 8; ++i) {
    std::uint64_t byte = 0;
    if (i < name.size()) {
      const char c = name[i];
      const bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
      if (!ok) throw DomainError("generator tag may contain letters and '_' only: " + std::string(name));
      byte = static_cast<unsigned char>(c);
    }
    packed_ = (packed_ << 8) | byte;
  }
}

std::string Tag::name() const {
  std::string out;
  for (int shift = 56; shift >= 0; shift -= 8) {
    const char c = static_cast<char>((packed_ >> shift) & 0xff);
    if (c == '\0') break;
    out.push_back(c);
  }
  return out;
}

Tag Tag::h() {
  static const Tag t("h");
  return t;
}

Tag Tag::j() {
  static const Tag t("J");
  return t;
}

Tag Tag::hstar() {
  static const Tag t("hstar");
  return t;
}

GeneratorId::GeneratorId(Tag t, int i) : tag(t), index(i) {
  if (i < 1) throw DomainError("generator index must be >= 1");
}

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(GeneratorId gen, unsigned mult) {
  if (mult > 0) factors_.push_back({gen, mult});
}

Monomial Monomial::from_factors(std::vector<Factor> factors) {
  std::sort(factors.begin(), factors.end(),
            [](const Factor& a, const Factor& b) { return a.gen < b.gen; });
  Monomial m;
  for (const Factor& f : factors) {
    if (f.mult == 0) continue;
    if (!m.factors_.empty() && m.factors_.back().gen == f.gen)
      m.factors_.back().mult += f.mult;
    else
      m.factors_.push_back(f);
  }
  return m;
}

int Monomial::degree() const {
  int d = 0;
  for (const Factor& f : factors_) d += f.gen.index * static_cast<int>(f.mult);
  return d;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r;
  r.factors_.reserve(a.factors_.size() + b.factors_.size());
  auto i = a.factors_.begin();
  auto j = b.factors_.begin();
  while (i != a.factors_.end() && j != b.factors_.end()) {
    if (i->gen < j->gen) {
      r.factors_.push_back(*i++);
    } else if (j->gen < i->gen) {
      r.factors_.push_back(*j++);
    } else {
      r.factors_.push_back({i->gen, i->mult + j->mult});
      ++i;
      ++j;
    }
  }
  r.factors_.insert(r.factors_.end(), i, a.factors_.end());
  r.factors_.insert(r.factors_.end(), j, b.factors_.end());
  return r;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  const auto& fa = a.factors_;
  const auto& fb = b.factors_;
  const std::size_t n = std::min(fa.size(), fb.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (fa[i].gen != fb[i].gen) return fa[i].gen <=> fb[i].gen;
    if (fa[i].mult == fb[i].mult) continue;
    // In the expanded words the side with more copies of this generator
    // continues with it, the other side with a strictly larger generator
    // or nothing at all.
    if (fa[i].mult > fb[i].mult)
      return (i + 1 < fb.size()) ? std::strong_ordering::less : std::strong_ordering::greater;
    return (i + 1 < fa.size()) ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  return fa.size() <=> fb.size();
}

std::string Monomial::to_string() const {
  if (factors_.empty()) return "1";
  std::string out;
  for (const Factor& f : factors_) {
    if (!out.empty()) out += '*';
    out += f.gen.tag.name();
    out += std::to_string(f.gen.index);
    if (f.mult > 1) out += '^' + std::to_string(f.mult);
  }
  return out;
}

// ---------------------------------------------------------------- Poly

namespace {

bool term_less(const Poly::Term& a, const Poly::Term& b) { return a.first < b.first; }

// Sorts by monomial, merges duplicates and removes zeros.
std::vector<Poly::Term> normalize(std::vector<Poly::Term> terms) {
  std::sort(terms.begin(), terms.end(), term_less);
  std::vector<Poly::Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().first == t.first)
      out.back().second += t.second;
    else {
      if (!out.empty() && out.back().second.is_zero()) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().second.is_zero()) out.pop_back();
  return out;
}

}  // namespace

Poly::Poly(Coefficient constant) {
  if (!constant.is_zero()) terms_.emplace_back(Monomial{}, std::move(constant));
}

Poly Poly::generator(GeneratorId gen) { return monomial(Monomial(gen), 1); }

Poly Poly::monomial(Monomial m, Coefficient c) {
  Poly p;
  if (!c.is_zero()) p.terms_.emplace_back(std::move(m), std::move(c));
  return p;
}

Poly Poly::from_terms(std::vector<Term> terms) {
  Poly p;
  p.terms_ = normalize(std::move(terms));
  return p;
}

bool Poly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_unit()); }

Coefficient Poly::constant_term() const {
  // The unit monomial is the smallest in monomial order.
  if (!terms_.empty() && terms_.front().first.is_unit()) return terms_.front().second;
  return 0;
}

int Poly::filtration_degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

Poly& Poly::operator+=(const Poly& other) {
  if (other.terms_.empty()) return *this;
  if (terms_.empty()) return *this = other;
  std::vector<Term> merged;
  merged.reserve(terms_.size() + other.terms_.size());
  auto i = terms_.begin();
  auto j = other.terms_.begin();
  while (i != terms_.end() && j != other.terms_.end()) {
    const auto c = i->first <=> j->first;
    if (c < 0) {
      merged.push_back(std::move(*i++));
    } else if (c > 0) {
      merged.push_back(*j++);
    } else {
      Coefficient s = i->second + j->second;
      if (!s.is_zero()) merged.emplace_back(std::move(i->first), std::move(s));
      ++i;
      ++j;
    }
  }
  for (; i != terms_.end(); ++i) merged.push_back(std::move(*i));
  for (; j != other.terms_.end(); ++j) merged.push_back(*j);
  terms_ = std::move(merged);
  return *this;
}

Poly& Poly::operator-=(const Poly& other) { return *this += -other; }

Poly& Poly::operator*=(const Poly& other) { return *this = *this * other; }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.is_constant()) return a.terms_[0].second * b;
  if (b.is_constant()) return b.terms_[0].second * a;
  std::vector<Poly::Term> prod;
  prod.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) prod.emplace_back(ma * mb, ca * cb);
  return Poly::from_terms(std::move(prod));
}

Poly operator*(const Coefficient& c, const Poly& p) {
  if (c.is_zero()) return {};
  if (c.is_one()) return p;
  Poly r = p;
  for (auto& t : r.terms_) t.second *= c;
  return r;
}

Poly Poly::substitute(const std::function<Poly(const GeneratorId&)>& image) const {
  Poly out;
  for (const auto& [m, c] : terms_) {
    Poly term(c);
    for (const Factor& f : m.factors()) term *= pow(image(f.gen), f.mult);
    out += term;
  }
  return out;
}

Coefficient Poly::evaluate(const std::function<Coefficient(const GeneratorId&)>& value) const {
  Coefficient out;
  for (const auto& [m, c] : terms_) {
    Coefficient term = c;
    for (const Factor& f : m.factors()) {
      const Coefficient v = value(f.gen);
      for (unsigned e = 0; e < f.mult; ++e) term *= v;
    }
    out += term;
  }
  return out;
}

bool Poly::only_uses(Tag tag) const {
  for (const auto& [m, c] : terms_)
    for (const Factor& f : m.factors())
      if (f.gen.tag != tag) return false;
  return true;
}

std::vector<Poly::Term> Poly::display_terms() const {
  std::vector<Term> out = terms_;
  std::stable_sort(out.begin(), out.end(), [](const Term& a, const Term& b) {
    return a.first.degree() < b.first.degree();
  });
  return out;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : display_terms()) {
    const bool negative = c.sign() < 0;
    if (first)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    first = false;
    const Coefficient mag = c.abs();
    if (m.is_unit()) {
      os << mag.to_string();
    } else {
      if (!mag.is_one()) os << mag.to_string() << '*';
      os << m.to_string();
    }
  }
  return os.str();
}

Poly pow(const Poly& base, unsigned exponent) {
  Poly result(1);
  Poly b = base;
  while (exponent > 0) {
    if (exponent & 1u) result *= b;
    exponent >>= 1;
    if (exponent > 0) b *= b;
  }
  return result;
}

}  // namespace jtvo
