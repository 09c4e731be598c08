#pragma once

#include "jtvo/coefficient.hpp"
#include "jtvo/partition.hpp"
#include "jtvo/poly.hpp"
#include "jtvo/schur.hpp"

#include <map>
#include <mutex>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace jtvo {

// s_lambda z^m
struct BasisVector {
  Partition shape;
  int charge = 0;

  friend bool operator==(const BasisVector&, const BasisVector&) = default;
  friend auto operator<=>(const BasisVector&, const BasisVector&) = default;
};

// Finite linear combination of basis vectors s_lambda z^m; no zero
// coefficients are stored.
class BosonState {
public:
  BosonState() = default;
  static BosonState basis(Partition shape, int charge, Coefficient c = 1);

  void add(const BasisVector& v, const Coefficient& c);

  const std::map<BasisVector, Coefficient>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  // Coefficient of one basis vector (zero if absent).
  Coefficient coefficient(const BasisVector& v) const;

  BosonState& operator+=(const BosonState& other);
  BosonState& operator-=(const BosonState& other);
  friend BosonState operator+(BosonState a, const BosonState& b) { return a += b; }
  friend BosonState operator-(BosonState a, const BosonState& b) { return a -= b; }
  friend BosonState operator*(const Coefficient& c, const BosonState& s);
  friend bool operator==(const BosonState&, const BosonState&) = default;

  // "[2,1]@0 - 3/2*[]@-1"; the zero state renders as "0".
  std::string to_string() const;

private:
  std::map<BasisVector, Coefficient> terms_;
};

// "2,1@0" or "@-1" (empty partition).
BosonState parse_state(std::string_view text);
// Inverse of BosonState::to_string: "0" or signed terms "c*[lambda]@m".
BosonState parse_state_expression(std::string_view text);

enum class FermionKind { Psi, PsiStar };

struct Letter {
  FermionKind kind;
  int index;

  friend bool operator==(const Letter&, const Letter&) = default;
};

// Word in psi / psi*; letters are applied right to left.
struct OperatorWord {
  std::vector<Letter> letters;

  // "psi:3,psistar:0" (spaces ignored, empty = empty word)
  static OperatorWord parse(std::string_view text);
  std::string to_string() const;
};

// psi_k and psi*_k on one basis vector s_lambda z^m. The charge of the
// result is m + 1 (psi) or m - 1 (psi*).
SignedPartition psi_on_basis(int k, const Partition& lambda, int charge);
SignedPartition psi_star_on_basis(int k, const Partition& lambda, int charge);

// Partition (lambda_1+1, ..., lambda_{t-1}+1, lambda_{t+1}, ...) for t >= 1.
Partition remove_row_raise_above(const Partition& lambda, int t);

// Bernstein words: psi_{lambda_1+l} ... psi_{lambda_l+1} creates s_lambda z^l
// from the vacuum, psi*_{-lambda_1-l+1} ... psi*_{-lambda_l} creates
// (-1)^{|lambda|} s_{lambda'} z^{-l}.
OperatorWord bernstein_creation_word(const Partition& lambda);
OperatorWord bernstein_annihilation_word(const Partition& lambda);

// The boson space (+)_m z^m B of one generator family, with the Clifford
// action, the skew operators D_p and D^(p) and the Heisenberg generators.
class BosonFock {
public:
  explicit BosonFock(const SchurEngine& engine) : engine_(engine) {}

  const SchurEngine& engine() const { return engine_; }
  const GeneratorFamily& family() const { return engine_.family(); }

  BosonState psi(int k, const BosonState& s) const;
  BosonState psi_star(int k, const BosonState& s) const;
  BosonState apply(const OperatorWord& word, const BosonState& s) const;

  // alpha_k = sum_{j>=1} psi_j psi*_{j+k} - sum_{j<=0} psi*_{j+k} psi_j
  BosonState alpha(int k, const BosonState& s) const;

  // D_p(s_lambda): determinant of the Jacobi-Trudi matrix with all
  // subscripts lowered by one and column p deleted; zero unless 0 <= p <= l.
  Poly d_skew(int p, const Partition& lambda) const;
  // D^(p)(s_lambda) = sum_t (-1)^{t+1} h^(p)_{lambda_t - t + 2} s_{(lambda_1+1, .., lambda_{t-1}+1, lambda_{t+1}, ..)}
  Poly d_upper(int p, const Partition& lambda) const;

  // Polynomial value of each charge component.
  std::map<int, Poly> expand(const BosonState& s) const;
  // Value of the charge-m component (zero if absent).
  Poly expand_at(const BosonState& s, int charge) const;

private:
  const SchurEngine& engine_;

  mutable std::mutex mutex_;
  mutable std::map<std::pair<int, Partition>, Poly> d_skew_cache_;
  mutable std::map<std::pair<int, Partition>, Poly> d_upper_cache_;
};

}  // namespace jtvo
