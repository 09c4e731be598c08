#include "jtvo/fermion.hpp"

#include <algorithm>
#include <sstream>

namespace jtvo {

namespace {

// Partition of charge m whose index sequence starts with `indices` and then
// continues with the tail m - k + 1.
Partition from_indices(int charge, const std::vector<int>& indices) {
  std::vector<int> parts;
  parts.reserve(indices.size());
  for (std::size_t k = 0; k < indices.size(); ++k) parts.push_back(indices[k] - charge + static_cast<int>(k));
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  return Partition(std::move(parts));
}

}  // namespace

FermionState FermionState::basis(int charge, Partition shape, Coefficient c) {
  FermionState s;
  s.add({charge, std::move(shape)}, c);
  return s;
}

void FermionState::add(const Key& key, const Coefficient& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

FermionState& FermionState::operator+=(const FermionState& other) {
  for (const auto& [k, c] : other.terms_) add(k, c);
  return *this;
}

FermionState& FermionState::operator-=(const FermionState& other) {
  for (const auto& [k, c] : other.terms_) add(k, -c);
  return *this;
}

FermionState operator*(const Coefficient& c, const FermionState& s) {
  FermionState out;
  if (c.is_zero()) return out;
  for (const auto& [k, x] : s.terms_) out.terms_.emplace(k, c * x);
  return out;
}

std::string FermionState::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, c] : terms_) {
    const auto& [charge, lambda] = key;
    const bool negative = c.sign() < 0;
    os << (first ? (negative ? "-" : "") : (negative ? " - " : " + "));
    first = false;
    if (!c.abs().is_one()) os << c.abs().to_string() << '*';
    for (int i : wedge_indices(charge, lambda, lambda.length())) os << "v_" << i << '^';
    os << '|' << charge - lambda.length() << '>';
  }
  return os.str();
}

std::vector<int> wedge_indices(int charge, const Partition& lambda, int rows) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(std::max(rows, 0)));
  for (int k = 1; k <= rows; ++k) out.push_back(lambda.part(k) + charge - k + 1);
  return out;
}

FermionState f_psi(int k, const FermionState& s) {
  FermionState out;
  for (const auto& [key, c] : s.terms()) {
    const auto& [m, lambda] = key;
    // Enough rows that the last one is below k or k is reached.
    const int rows = std::max(lambda.length(), m - k + 2);
    std::vector<int> idx = wedge_indices(m, lambda, rows);
    if (std::find(idx.begin(), idx.end(), k) != idx.end()) continue;
    const auto slot = std::find_if(idx.begin(), idx.end(), [k](int i) { return i < k; });
    const long above = slot - idx.begin();
    idx.insert(slot, k);
    out.add({m + 1, from_indices(m + 1, idx)}, sign_power(above) > 0 ? c : -c);
  }
  return out;
}

FermionState f_psi_star(int k, const FermionState& s) {
  FermionState out;
  for (const auto& [key, c] : s.terms()) {
    const auto& [m, lambda] = key;
    const int rows = std::max(lambda.length(), m - k + 1) + 1;
    std::vector<int> idx = wedge_indices(m, lambda, rows);
    const auto pos = std::find(idx.begin(), idx.end(), k);
    if (pos == idx.end()) continue;
    const long above = pos - idx.begin();  // t - 1
    idx.erase(pos);
    out.add({m - 1, from_indices(m - 1, idx)}, sign_power(above) > 0 ? c : -c);
  }
  return out;
}

FermionState f_apply(const OperatorWord& word, const FermionState& s) {
  FermionState out = s;
  for (auto it = word.letters.rbegin(); it != word.letters.rend(); ++it)
    out = it->kind == FermionKind::Psi ? f_psi(it->index, out) : f_psi_star(it->index, out);
  return out;
}

BosonState correspond(const FermionState& s) {
  BosonState out;
  for (const auto& [key, c] : s.terms()) out.add({key.second, key.first}, c);
  return out;
}

FermionState correspond(const BosonState& s) {
  FermionState out;
  for (const auto& [v, c] : s.terms()) out.add({v.charge, v.shape}, c);
  return out;
}

}  // namespace jtvo
