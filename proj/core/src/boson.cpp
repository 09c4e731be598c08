#include "jtvo/boson.hpp"

#include "jtvo/errors.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

namespace jtvo {

// ---------------------------------------------------------------- BosonState

BosonState BosonState::basis(Partition shape, int charge, Coefficient c) {
  BosonState s;
  s.add({std::move(shape), charge}, c);
  return s;
}

void BosonState::add(const BasisVector& v, const Coefficient& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(v, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Coefficient BosonState::coefficient(const BasisVector& v) const {
  auto it = terms_.find(v);
  return it == terms_.end() ? Coefficient{} : it->second;
}

BosonState& BosonState::operator+=(const BosonState& other) {
  for (const auto& [v, c] : other.terms_) add(v, c);
  return *this;
}

BosonState& BosonState::operator-=(const BosonState& other) {
  for (const auto& [v, c] : other.terms_) add(v, -c);
  return *this;
}

BosonState operator*(const Coefficient& c, const BosonState& s) {
  BosonState out;
  if (c.is_zero()) return out;
  for (const auto& [v, x] : s.terms_) out.terms_.emplace(v, c * x);
  return out;
}

std::string BosonState::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [v, c] : terms_) {
    const bool negative = c.sign() < 0;
    os << (first ? (negative ? "-" : "") : (negative ? " - " : " + "));
    first = false;
    if (!c.abs().is_one()) os << c.abs().to_string() << '*';
    os << '[' << v.shape.to_string() << "]@" << v.charge;
  }
  return os.str();
}

BosonState parse_state(std::string_view text) {
  const auto at = text.find('@');
  if (at == std::string_view::npos) throw ParseError("state literal must look like 'lambda@m': " + std::string(text));
  const Partition shape = parse_partition(text.substr(0, at));
  std::string_view charge = text.substr(at + 1);
  while (!charge.empty() && std::isspace(static_cast<unsigned char>(charge.front()))) charge.remove_prefix(1);
  while (!charge.empty() && std::isspace(static_cast<unsigned char>(charge.back()))) charge.remove_suffix(1);
  int m = 0;
  const char* first = charge.data();
  if (!charge.empty() && charge.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, charge.data() + charge.size(), m);
  if (charge.empty() || ec != std::errc{} || ptr != charge.data() + charge.size())
    throw ParseError("malformed charge in state literal: " + std::string(text));
  return BosonState::basis(shape, m);
}

BosonState parse_state_expression(std::string_view text) {
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
  BosonState out;
  if (t == "0") return out;
  if (t.find('[') == std::string::npos) return parse_state(t);
  std::size_t pos = 0;
  while (pos < t.size()) {
    bool negative = false;
    if (t[pos] == '+' || t[pos] == '-') {
      negative = t[pos] == '-';
      ++pos;
    }
    const std::size_t open = t.find('[', pos);
    const std::size_t close = t.find(']', pos);
    if (open == std::string::npos || close == std::string::npos || close < open || close + 1 >= t.size() || t[close + 1] != '@')
      throw ParseError("malformed state term in '" + std::string(text) + "'");
    Coefficient c = 1;
    if (open > pos) {
      if (t[open - 1] != '*') throw ParseError("expected '*' before '[' in '" + std::string(text) + "'");
      c = Coefficient::parse(std::string_view(t).substr(pos, open - 1 - pos));
    }
    std::size_t end = close + 2;
    if (end < t.size() && (t[end] == '-' || t[end] == '+')) ++end;
    while (end < t.size() && std::isdigit(static_cast<unsigned char>(t[end]))) ++end;
    const BosonState term = parse_state(t.substr(open + 1, close - open - 1) + t.substr(close + 1, end - close - 1));
    out += (negative ? -c : c) * term;
    pos = end;
  }
  return out;
}

// ---------------------------------------------------------------- words

OperatorWord OperatorWord::parse(std::string_view text) {
  std::string cleaned;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) cleaned.push_back(c);
  OperatorWord w;
  if (cleaned.empty()) return w;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = cleaned.find(',', start);
    const std::string item = cleaned.substr(start, comma - start);
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw ParseError("word letter must look like 'psi:k' or 'psistar:k': " + item);
    const std::string name = item.substr(0, colon);
    FermionKind kind;
    if (name == "psi")
      kind = FermionKind::Psi;
    else if (name == "psistar")
      kind = FermionKind::PsiStar;
    else
      throw ParseError("unknown operator '" + name + "' (expected psi or psistar)");
    const std::string idx = item.substr(colon + 1);
    int k = 0;
    const char* first = idx.data();
    if (!idx.empty() && idx.front() == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, idx.data() + idx.size(), k);
    if (idx.empty() || ec != std::errc{} || ptr != idx.data() + idx.size())
      throw ParseError("malformed operator index in '" + item + "'");
    w.letters.push_back({kind, k});
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return w;
}

std::string OperatorWord::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (i) out += ',';
    out += letters[i].kind == FermionKind::Psi ? "psi:" : "psistar:";
    out += std::to_string(letters[i].index);
  }
  return out;
}

// ---------------------------------------------------------------- basis action

SignedPartition psi_on_basis(int k, const Partition& lambda, int charge) {
  std::vector<int> v;
  v.reserve(static_cast<std::size_t>(lambda.length()) + 1);
  v.push_back(k - charge - 1);
  v.insert(v.end(), lambda.parts().begin(), lambda.parts().end());
  return straighten(IntegerVector(std::move(v)));
}

Partition remove_row_raise_above(const Partition& lambda, int t) {
  std::vector<int> parts;
  const int rows = std::max(lambda.length(), t);
  for (int i = 1; i <= rows; ++i) {
    if (i < t)
      parts.push_back(lambda.part(i) + 1);
    else if (i > t)
      parts.push_back(lambda.part(i));
  }
  return Partition(std::move(parts));
}

SignedPartition psi_star_on_basis(int k, const Partition& lambda, int charge) {
  // lambda_t - t is strictly decreasing in t, so at most one row matches
  // and the scan stops as soon as the target is passed.
  const int target = k - charge - 1;
  for (int t = 1;; ++t) {
    const int value = lambda.part(t) - t;
    if (value < target) return {};
    if (value == target) return {sign_power(t + 1), remove_row_raise_above(lambda, t)};
  }
}

OperatorWord bernstein_creation_word(const Partition& lambda) {
  OperatorWord w;
  const int l = lambda.length();
  for (int i = 1; i <= l; ++i) w.letters.push_back({FermionKind::Psi, lambda.part(i) + l - i + 1});
  return w;
}

OperatorWord bernstein_annihilation_word(const Partition& lambda) {
  OperatorWord w;
  const int l = lambda.length();
  for (int i = 1; i <= l; ++i) w.letters.push_back({FermionKind::PsiStar, -lambda.part(i) - l + i});
  return w;
}

// ---------------------------------------------------------------- BosonFock

BosonState BosonFock::psi(int k, const BosonState& s) const {
  BosonState out;
  for (const auto& [v, c] : s.terms()) {
    const SignedPartition r = psi_on_basis(k, v.shape, v.charge);
    if (r.sign != 0) out.add({r.shape, v.charge + 1}, r.sign > 0 ? c : -c);
  }
  return out;
}

BosonState BosonFock::psi_star(int k, const BosonState& s) const {
  BosonState out;
  for (const auto& [v, c] : s.terms()) {
    const SignedPartition r = psi_star_on_basis(k, v.shape, v.charge);
    if (r.sign != 0) out.add({r.shape, v.charge - 1}, r.sign > 0 ? c : -c);
  }
  return out;
}

BosonState BosonFock::apply(const OperatorWord& word, const BosonState& s) const {
  BosonState out = s;
  for (auto it = word.letters.rbegin(); it != word.letters.rend(); ++it)
    out = it->kind == FermionKind::Psi ? psi(it->index, out) : psi_star(it->index, out);
  return out;
}

BosonState BosonFock::alpha(int k, const BosonState& s) const {
  BosonState out;
  for (const auto& [v, c] : s.terms()) {
    const BosonState basis = BosonState::basis(v.shape, v.charge, c);
    const int l = v.shape.length();
    // psi*_{j+k} needs j + k - m - 1 = lambda_t - t for some t, hence
    // j + k <= lambda_1 + m. psi_j with j <= 0 needs j - m - 1 to differ
    // from every lambda_t - t, hence j > m - l.
    const int upper = v.shape.part(1) + v.charge - k;
    const int lower = v.charge - l + 1;
    auto positive_term = [&](int j) { return psi(j, psi_star(j + k, basis)); };
    auto negative_term = [&](int j) { return psi_star(j + k, psi(j, basis)); };
    for (int j = 1; j <= upper; ++j) out += positive_term(j);
    for (int j = lower; j <= 0; ++j) out -= negative_term(j);
    const int j_hi = std::max(1, upper + 1);
    const int j_lo = std::min(0, lower - 1);
    if (!positive_term(j_hi).is_zero() || !negative_term(j_lo).is_zero())
      throw IdentityViolation("alpha_" + std::to_string(k) + ": normal-ordered sum does not truncate on [" +
                              v.shape.to_string() + "]@" + std::to_string(v.charge));
  }
  return out;
}

Poly BosonFock::d_skew(int p, const Partition& lambda) const {
  const int l = lambda.length();
  if (p < 0 || p > l) return {};
  const auto key = std::make_pair(p, lambda);
  {
    std::lock_guard lock(mutex_);
    if (auto it = d_skew_cache_.find(key); it != d_skew_cache_.end()) return it->second;
  }
  auto truncated = [&](int size) {
    const auto n = static_cast<std::size_t>(size);
    return det(PolyMatrix::generate(n, n, [&](std::size_t i, std::size_t j) {
      const int row = static_cast<int>(i) + 1;
      int col = static_cast<int>(j);
      if (col >= p) ++col;  // skip the deleted column
      return engine_.h(col, lambda.part(row) - row);
    }));
  };
  Poly value = truncated(l);
  if (engine_.options().self_check && truncated(l + 1) != value)
    throw IdentityViolation(family().name() + ": D_" + std::to_string(p) + " determinant of (" +
                            lambda.to_string() + ") does not stabilize");
  std::lock_guard lock(mutex_);
  return d_skew_cache_.try_emplace(key, std::move(value)).first->second;
}

Poly BosonFock::d_upper(int p, const Partition& lambda) const {
  const auto key = std::make_pair(p, lambda);
  {
    std::lock_guard lock(mutex_);
    if (auto it = d_upper_cache_.find(key); it != d_upper_cache_.end()) return it->second;
  }
  // Rows t > l carry h^(p)_{2-t}, which vanishes once t > p + 2.
  const int l = lambda.length();
  const int last = l + std::max(0, p + 2) + 1;
  Poly value;
  for (int t = 1; t <= last; ++t) {
    const Poly coeff = engine_.h(p, lambda.part(t) - t + 2);
    if (coeff.is_zero()) continue;
    const Poly term = coeff * engine_.schur(remove_row_raise_above(lambda, t));
    if (t % 2 == 1)
      value += term;
    else
      value -= term;
  }
  if (!engine_.h(p, lambda.part(last + 1) - (last + 1) + 2).is_zero())
    throw IdentityViolation(family().name() + ": D^(" + std::to_string(p) + ") expansion does not truncate");
  std::lock_guard lock(mutex_);
  return d_upper_cache_.try_emplace(key, std::move(value)).first->second;
}

std::map<int, Poly> BosonFock::expand(const BosonState& s) const {
  std::map<int, Poly> out;
  for (const auto& [v, c] : s.terms()) out[v.charge] += c * engine_.schur(v.shape);
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

Poly BosonFock::expand_at(const BosonState& s, int charge) const {
  Poly out;
  for (const auto& [v, c] : s.terms())
    if (v.charge == charge) out += c * engine_.schur(v.shape);
  return out;
}

}  // namespace jtvo
