#pragma once

#include "jtvo/boson.hpp"
#include "jtvo/coefficient.hpp"
#include "jtvo/partition.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace jtvo {

// Semi-infinite wedge space. The basis vector (m, lambda) is
//   v_{lambda_1+m} ^ v_{lambda_2+m-1} ^ ...,
// whose index sequence i_k = lambda_k + m - k + 1 is strictly decreasing
// and equals m - k + 1 from row l(lambda) + 1 on.
class FermionState {
public:
  using Key = std::pair<int, Partition>;  // (charge, lambda)

  FermionState() = default;
  static FermionState basis(int charge, Partition shape, Coefficient c = 1);
  // The vacuum |m>.
  static FermionState vacuum(int charge) { return basis(charge, Partition{}); }

  void add(const Key& key, const Coefficient& c);
  const std::map<Key, Coefficient>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  FermionState& operator+=(const FermionState& other);
  FermionState& operator-=(const FermionState& other);
  friend FermionState operator+(FermionState a, const FermionState& b) { return a += b; }
  friend FermionState operator-(FermionState a, const FermionState& b) { return a -= b; }
  friend FermionState operator*(const Coefficient& c, const FermionState& s);
  friend bool operator==(const FermionState&, const FermionState&) = default;

  // "v_3^v_1^|-1>" per term.
  std::string to_string() const;

private:
  std::map<Key, Coefficient> terms_;
};

// First `rows` entries of the index sequence of (m, lambda).
std::vector<int> wedge_indices(int charge, const Partition& lambda, int rows);

// Wedging v_k in front.
FermionState f_psi(int k, const FermionState& s);
// Contraction removing v_k, with sign (-1)^{t-1} when k sits in slot t.
FermionState f_psi_star(int k, const FermionState& s);
FermionState f_apply(const OperatorWord& word, const FermionState& s);

// v_lambda in charge m <-> s_lambda z^m.
BosonState correspond(const FermionState& s);
FermionState correspond(const BosonState& s);

}  // namespace jtvo
