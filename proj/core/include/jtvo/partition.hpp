#pragma once

#include <compare>
#include <cstddef>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace jtvo {

// Weakly decreasing sequence of positive integers; trailing zeros are
// never stored.
class Partition {
public:
  Partition() = default;
  // Accepts trailing zeros (they are dropped); rejects negative or
  // increasing data.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  std::span<const int> parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int weight() const;
  bool empty() const { return parts_.empty(); }
  // 1-based part; zero beyond the length.
  int part(int i) const { return (i >= 1 && i <= length()) ? parts_[i - 1] : 0; }

  // "3,2,2,2"; the empty partition renders as "".
  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;
  friend std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << '(' << p.to_string() << ')'; }

private:
  std::vector<int> parts_;
};

// Arbitrary finite integer sequence, followed implicitly by zeros.
struct IntegerVector {
  std::vector<int> entries;

  IntegerVector() = default;
  explicit IntegerVector(std::vector<int> e) : entries(std::move(e)) {}
  IntegerVector(std::initializer_list<int> e) : entries(e) {}
  explicit IntegerVector(const Partition& p) : entries(p.parts().begin(), p.parts().end()) {}

  int length() const { return static_cast<int>(entries.size()); }
  std::string to_string() const;

  friend bool operator==(const IntegerVector&, const IntegerVector&) = default;
};

// Result of straightening: sign in {-1, 0, +1}; shape is empty when the
// sign is zero.
struct SignedPartition {
  int sign = 0;
  Partition shape;

  friend bool operator==(const SignedPartition&, const SignedPartition&) = default;
};

// Arm and leg lengths along the main diagonal.
struct FrobeniusCoords {
  std::vector<int> alphas;
  std::vector<int> betas;

  int rank() const { return static_cast<int>(alphas.size()); }
  // "(2 0|3 2)"
  std::string to_string() const;

  friend bool operator==(const FrobeniusCoords&, const FrobeniusCoords&) = default;
};

Partition conjugate(const Partition& lambda);

FrobeniusCoords to_frobenius(const Partition& lambda);
// Throws DomainError unless both lists are strictly decreasing,
// nonnegative and of equal length.
Partition from_frobenius(const FrobeniusCoords& coords);

// Reduces the determinant row data v to +/- a partition or zero.
//
// Row i of the Jacobi-Trudi matrix depends on v only through mu_i = v_i - i,
// and the implicit zero tail contributes the rows mu = -(l+1), -(l+2), ...
// Those tail rows form a unit upper-triangular block below a zero block,
// so the determinant vanishes exactly when two mu_i coincide or some mu_i
// repeats a tail value (mu_i <= -(l+1)). Otherwise sorting the mu_i in
// strictly decreasing order permutes rows, contributing the parity of the
// sorting permutation, and shape_i = mu_sorted(i) + i.
SignedPartition straighten(const IntegerVector& v);

// All partitions of n, in reverse lexicographic order ((n) first).
std::vector<Partition> partitions_of(int n);
// All partitions of weight 0..max_weight, grouped by weight.
std::vector<Partition> partitions_up_to(int max_weight);

// "3,2,1" (empty string = empty vector). Whitespace is ignored.
IntegerVector parse_integer_vector(std::string_view text);
Partition parse_partition(std::string_view text);

}  // namespace jtvo
