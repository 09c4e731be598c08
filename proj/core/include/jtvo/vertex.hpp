#pragma once

#include "jtvo/boson.hpp"
#include "jtvo/laurent.hpp"
#include "jtvo/partition.hpp"
#include "jtvo/poly.hpp"

namespace jtvo {

// Outcome of checking one identity for psi_k and for psi*_k.
struct FlagPair {
  bool psi = false;
  bool psi_star = false;

  bool both() const { return psi && psi_star; }
  friend bool operator==(const FlagPair&, const FlagPair&) = default;
};

// psi_k s_lambda z^m = sum_p (-1)^p h^(p)_{k-m-1} D_p(s_lambda) z^{m+1}
// psi*_k s_lambda z^m = (-1)^{k-m+1} sum_p (-1)^p e^(p)_{k-m+1} D^(-p)(s_lambda) z^{m-1}
// Both sides are compared as expanded polynomials.
FlagPair verify_prop42(const BosonFock& fock, int k, int m, const Partition& lambda);

// Coefficient identities of the character-family vertex operators
//   Psi(u,m)  = u^{m+1} z J(u) (DE(-u) + DE(-1/u) - D_0)
//   Psi*(u,m) = u^{-m+1} z^{-1} K(-u) (DH(u) - DH(1/u)).
// Requires the LieCharacter family.
FlagPair verify_char_vertex(const BosonFock& fock, int k, int m, const Partition& lambda);

// Coefficient identities for a constant-coefficient linear recurrence with
// f(u) = u^{-1} + a_0 + a_1 u + ... + a_l u^l:
//   Psi(u,m) = u^{m+1} z H(u) DE(-f(u)),
// and for psi* the convolution form obtained from
//   e^(p)_k = sum_i (-1)^{i-1} a_i e^(p-1)_{k+i},
// cross-checked against the generating form u^{-m+1} z^{-1} E(-1/u) DH(f(u)).
// Throws UnsupportedFamily for other families.
FlagPair verify_linrec_vertex(const BosonFock& fock, int k, int m, const Partition& lambda);

// f(u) of a constant-coefficient linear recurrence family.
Laurent recurrence_symbol(const GeneratorFamily& family);

// sum_n [u^n](-f(-u))^p e^(0)_{a+n}, which equals e^(p)_a.
Poly elementary_by_recursion(const BosonFock& fock, int p, int a);

// e^(i)_j through K coefficients: K_{i-j} for i <= 0, K_{i-j} - K_{-i-j} for i > 0.
Poly lie_elementary_via_k(int i, int j);

}  // namespace jtvo
