#include "jtvo/vertex.hpp"

#include "jtvo/errors.hpp"

#include <algorithm>

namespace jtvo {

namespace {

bool all_in_charge(const BosonState& s, int charge) {
  return std::all_of(s.terms().begin(), s.terms().end(), [charge](const auto& kv) { return kv.first.charge == charge; });
}

Poly signed_sum_term(int sign, const Poly& p) { return sign > 0 ? p : -p; }

// Value of psi*_k s_lambda z^m as a polynomial (charge m-1 checked).
bool lhs_value(const BosonFock& fock, const BosonState& image, int charge, Poly& out) {
  if (!all_in_charge(image, charge)) return false;
  out = fock.expand_at(image, charge);
  return true;
}

// D^(-q)(s_lambda) vanishes for q <= 0 and q > lambda_1 + 1.
void assert_upper_support(const BosonFock& fock, const Partition& lambda) {
  if (!fock.d_upper(0, lambda).is_zero() || !fock.d_upper(-(lambda.part(1) + 2), lambda).is_zero())
    throw IdentityViolation(fock.family().name() + ": D^(p) support on (" + lambda.to_string() +
                            ") exceeds -lambda_1-1 <= p <= -1");
}

void assert_skew_support(const BosonFock& fock, const Partition& lambda) {
  if (!fock.d_skew(lambda.length() + 1, lambda).is_zero() || !fock.d_skew(-1, lambda).is_zero())
    throw IdentityViolation(fock.family().name() + ": D_p support on (" + lambda.to_string() + ") exceeds 0..l");
}

}  // namespace

FlagPair verify_prop42(const BosonFock& fock, int k, int m, const Partition& lambda) {
  const SchurEngine& engine = fock.engine();
  const BosonState state = BosonState::basis(lambda, m);
  const int l = lambda.length();
  FlagPair flags;

  Poly lhs;
  if (lhs_value(fock, fock.psi(k, state), m + 1, lhs)) {
    assert_skew_support(fock, lambda);
    Poly rhs;
    for (int p = 0; p <= l; ++p)
      rhs += signed_sum_term(sign_power(p), engine.h(p, k - m - 1) * fock.d_skew(p, lambda));
    flags.psi = lhs == rhs;
  }

  if (lhs_value(fock, fock.psi_star(k, state), m - 1, lhs)) {
    assert_upper_support(fock, lambda);
    // e^(p)_a = 0 for p < a and D^(-p) = 0 unless 1 <= p <= lambda_1 + 1.
    const int a = k - m + 1;
    Poly rhs;
    for (int p = std::max(1, a); p <= lambda.part(1) + 1; ++p)
      rhs += signed_sum_term(sign_power(p), engine.elementary(p, a) * fock.d_upper(-p, lambda));
    flags.psi_star = lhs == signed_sum_term(sign_power(a), rhs);
  }
  return flags;
}

Poly lie_elementary_via_k(int i, int j) {
  Poly out = lie_k_coefficient(i - j);
  if (i > 0) out -= lie_k_coefficient(-i - j);
  return out;
}

FlagPair verify_char_vertex(const BosonFock& fock, int k, int m, const Partition& lambda) {
  if (fock.family().kind() != FamilyKind::LieCharacter)
    throw UnsupportedFamily("character vertex operators need the lie family, got " + fock.family().name());
  const BosonState state = BosonState::basis(lambda, m);
  const int l = lambda.length();
  FlagPair flags;

  Poly lhs;
  if (lhs_value(fock, fock.psi(k, state), m + 1, lhs)) {
    assert_skew_support(fock, lambda);
    // Only J_t with t <= k - m - 1 + l reach u^k.
    Laurent j_series;
    for (int t = 0; t <= k - m - 1 + l; ++t) j_series.add(t, lie_j(t));
    Laurent de;
    for (int p = 0; p <= l; ++p) {
      const Poly d = signed_sum_term(sign_power(p), fock.d_skew(p, lambda));
      de.add(p, d);
      de.add(-p, d);
    }
    de.add(0, -fock.d_skew(0, lambda));
    const Laurent rhs = (j_series * de).shifted(m + 1);
    flags.psi = lhs == rhs.coefficient(k);
  }

  if (lhs_value(fock, fock.psi_star(k, state), m - 1, lhs)) {
    assert_upper_support(fock, lambda);
    const int top = lambda.part(1) + 1;
    Laurent k_series;  // K(-u), truncated where it can still reach u^{-k}
    for (int r = 0; r <= top - (k - m + 1); ++r) k_series.add(r, signed_sum_term(sign_power(r), lie_k_coefficient(r)));
    Laurent dh;
    for (int q = 1; q <= top; ++q) {
      const Poly d = fock.d_upper(-q, lambda);
      dh.add(-q, d);
      dh.add(q, -d);
    }
    const Laurent rhs = (k_series * dh).shifted(-m + 1);
    flags.psi_star = lhs == rhs.coefficient(-k);
  }
  return flags;
}

Laurent recurrence_symbol(const GeneratorFamily& family) {
  if (!family.has_constant_coefficients())
    throw UnsupportedFamily("vertex operators need a constant-coefficient linear recurrence, got " + family.name());
  Laurent f = Laurent::monomial(-1, Poly(1));
  const auto& a = family.recurrence_coefficients();
  for (std::size_t i = 0; i < a.size(); ++i) f.add(static_cast<int>(i), Poly(a[i]));
  return f;
}

Poly elementary_by_recursion(const BosonFock& fock, int p, int a) {
  const Laurent f = recurrence_symbol(fock.family());
  const Laurent f_minus_u = f.negated_variable();
  Laurent minus_f_minus_u;
  for (const auto& [e, c] : f_minus_u.terms()) minus_f_minus_u.add(e, -c);
  const Laurent power = pow(minus_f_minus_u, static_cast<unsigned>(p));
  Poly out;
  for (const auto& [n, c] : power.terms())
    out += c * fock.engine().elementary(0, a + n);
  return out;
}

FlagPair verify_linrec_vertex(const BosonFock& fock, int k, int m, const Partition& lambda) {
  const Laurent f = recurrence_symbol(fock.family());
  const SchurEngine& engine = fock.engine();
  const BosonState state = BosonState::basis(lambda, m);
  const int l = lambda.length();
  FlagPair flags;

  Poly lhs;
  if (lhs_value(fock, fock.psi(k, state), m + 1, lhs)) {
    assert_skew_support(fock, lambda);
    Laurent h_series;  // (-f)^p has lowest exponent -p >= -l
    for (int t = 0; t <= k - m - 1 + l; ++t) h_series.add(t, engine.h(0, t));
    Laurent minus_f;
    for (const auto& [e, c] : f.terms()) minus_f.add(e, -c);
    Laurent de;
    Laurent power = Laurent::monomial(0, Poly(1));
    for (int p = 0; p <= l; ++p) {
      de += fock.d_skew(p, lambda) * power;
      power = power * minus_f;
    }
    const Laurent rhs = (h_series * de).shifted(m + 1);
    flags.psi = lhs == rhs.coefficient(k);
  }

  if (lhs_value(fock, fock.psi_star(k, state), m - 1, lhs)) {
    assert_upper_support(fock, lambda);
    const int a = k - m + 1;
    const int top = lambda.part(1) + 1;

    Poly convolution;
    for (int p = 1; p <= top; ++p)
      convolution += signed_sum_term(sign_power(p), elementary_by_recursion(fock, p, a) * fock.d_upper(-p, lambda));
    convolution = signed_sum_term(sign_power(a), convolution);

    // E(-1/u) = sum_{j<=0} (-1)^j e^(0)_j u^{-j}; f(u)^q reaches down to u^{-q}.
    Laurent e_series;
    for (int j = 0; j >= a - top; --j) e_series.add(-j, signed_sum_term(sign_power(j), engine.elementary(0, j)));
    Laurent dh;
    Laurent power = f;
    for (int q = 1; q <= top; ++q) {
      dh += fock.d_upper(-q, lambda) * power;
      power = power * f;
    }
    const Laurent generating = (e_series * dh).shifted(-m + 1);

    flags.psi_star = lhs == convolution && lhs == generating.coefficient(-k);
  }
  return flags;
}

}  // namespace jtvo
