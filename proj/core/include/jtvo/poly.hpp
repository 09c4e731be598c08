#pragma once

#include "jtvo/coefficient.hpp"

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace jtvo {

// Symbolic label of a generator family ("h", "J", "hstar", or a user
// label of at most eight ASCII letters or underscores). Packed big-endian
// into one word so that integer order coincides with lexicographic order
// of the names.
class Tag {
public:
  constexpr Tag() = default;
  explicit Tag(std::string_view name);

  std::string name() const;

  friend constexpr bool operator==(Tag, Tag) = default;
  friend constexpr auto operator<=>(Tag, Tag) = default;

  static Tag h();
  static Tag j();
  static Tag hstar();

private:
  std::uint64_t packed_ = 0;
};

// Generator of index >= 1; its graded degree equals the index.
struct GeneratorId {
  Tag tag;
  int index = 1;

  GeneratorId(Tag t, int i);

  friend bool operator==(const GeneratorId&, const GeneratorId&) = default;
  friend auto operator<=>(const GeneratorId&, const GeneratorId&) = default;
};

struct Factor {
  GeneratorId gen;
  unsigned mult;

  friend bool operator==(const Factor&, const Factor&) = default;
};

// Product of generator powers, factors strictly ascending by (tag, index).
// Monomials are ordered lexicographically as the expanded, sorted words of
// their generators (h1^2 = h1 h1 < h1 h2 < h3).
class Monomial {
public:
  Monomial() = default;  // the unit
  explicit Monomial(GeneratorId gen, unsigned mult = 1);
  // Merges repeated generators and drops zero multiplicities.
  static Monomial from_factors(std::vector<Factor> factors);

  const std::vector<Factor>& factors() const { return factors_; }
  bool is_unit() const { return factors_.empty(); }
  int degree() const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);

  std::string to_string() const;

private:
  std::vector<Factor> factors_;
};

// Exact sparse polynomial in canonical form: terms sorted by monomial order,
// no zero coefficients. Values are immutable in practice; all arithmetic
// returns fresh objects.
class Poly {
public:
  using Term = std::pair<Monomial, Coefficient>;

  Poly() = default;  // zero
  Poly(Coefficient constant);  // NOLINT: constants embed implicitly
  template <std::integral I>
  Poly(I constant) : Poly(Coefficient(constant)) {}  // NOLINT

  static Poly generator(GeneratorId gen);
  static Poly monomial(Monomial m, Coefficient c = 1);
  static Poly from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Coefficient constant_term() const;
  // Maximal total degree of a term; -1 for the zero polynomial.
  int filtration_degree() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Poly& other);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Coefficient& c, const Poly& p);
  friend bool operator==(const Poly&, const Poly&) = default;

  // Ring homomorphism determined by its values on generators.
  Poly substitute(const std::function<Poly(const GeneratorId&)>& image) const;
  Coefficient evaluate(const std::function<Coefficient(const GeneratorId&)>& value) const;
  bool only_uses(Tag tag) const;

  // Terms by ascending total degree, ties by monomial order: "h1^2 - h2".
  std::string to_string() const;
  // Terms in the same order as to_string().
  std::vector<Term> display_terms() const;

  friend std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.to_string(); }

private:
  std::vector<Term> terms_;
};

Poly pow(const Poly& base, unsigned exponent);

}  // namespace jtvo
