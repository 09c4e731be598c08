#include "jtvo/partition.hpp"

#include "jtvo/errors.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

namespace jtvo {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw DomainError("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw DomainError("partition parts must be weakly decreasing");
  }
}

int Partition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

namespace {

std::string join(std::span<const int> xs, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(xs[i]);
  }
  return out;
}

bool strictly_decreasing_nonnegative(const std::vector<int>& xs) {
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (xs[i] < 0) return false;
    if (i > 0 && xs[i] >= xs[i - 1]) return false;
  }
  return true;
}

}  // namespace

std::string Partition::to_string() const { return join(parts_, ","); }

std::string IntegerVector::to_string() const { return join(entries, ","); }

std::string FrobeniusCoords::to_string() const {
  return "(" + join(alphas, " ") + "|" + join(betas, " ") + ")";
}

Partition conjugate(const Partition& lambda) {
  std::vector<int> mu(static_cast<std::size_t>(lambda.part(1)), 0);
  for (int part : lambda.parts())
    for (int j = 0; j < part; ++j) ++mu[static_cast<std::size_t>(j)];
  return Partition(std::move(mu));
}

FrobeniusCoords to_frobenius(const Partition& lambda) {
  const Partition mu = conjugate(lambda);
  FrobeniusCoords out;
  for (int i = 1; lambda.part(i) >= i; ++i) {
    out.alphas.push_back(lambda.part(i) - i);
    out.betas.push_back(mu.part(i) - i);
  }
  return out;
}

Partition from_frobenius(const FrobeniusCoords& coords) {
  if (coords.alphas.size() != coords.betas.size())
    throw DomainError("Frobenius coordinates need equally many arms and legs");
  if (!strictly_decreasing_nonnegative(coords.alphas) || !strictly_decreasing_nonnegative(coords.betas))
    throw DomainError("Frobenius coordinates must be strictly decreasing and nonnegative");
  const int r = coords.rank();
  std::vector<int> parts;
  for (int i = 1; i <= r; ++i) parts.push_back(coords.alphas[static_cast<std::size_t>(i - 1)] + i);
  // Below the diagonal, row i has one box in column j for each leg with
  // beta_j + j >= i.
  const int rows = r == 0 ? 0 : coords.betas[0] + 1;
  for (int i = r + 1; i <= rows; ++i) {
    int count = 0;
    for (int j = 1; j <= r; ++j)
      if (coords.betas[static_cast<std::size_t>(j - 1)] + j >= i) ++count;
    parts.push_back(count);
  }
  return Partition(std::move(parts));
}

SignedPartition straighten(const IntegerVector& v) {
  const int l = v.length();
  std::vector<int> mu(static_cast<std::size_t>(l));
  for (int i = 1; i <= l; ++i) {
    mu[static_cast<std::size_t>(i - 1)] = v.entries[static_cast<std::size_t>(i - 1)] - i;
    if (mu[static_cast<std::size_t>(i - 1)] <= -(l + 1)) return {};
  }
  // Insertion sort into strictly decreasing order, counting transpositions.
  int swaps = 0;
  for (std::size_t i = 1; i < mu.size(); ++i)
    for (std::size_t j = i; j > 0 && mu[j - 1] <= mu[j]; --j) {
      if (mu[j - 1] == mu[j]) return {};
      std::swap(mu[j - 1], mu[j]);
      ++swaps;
    }
  std::vector<int> parts(mu.size());
  for (std::size_t i = 0; i < mu.size(); ++i) parts[i] = mu[i] + static_cast<int>(i) + 1;
  return {swaps % 2 == 0 ? 1 : -1, Partition(std::move(parts))};
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  if (n < 0) return out;
  std::vector<int> current;
  auto rec = [&](auto&& self, int remaining, int max_part) -> void {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      current.push_back(p);
      self(self, remaining - p, p);
      current.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

std::vector<Partition> partitions_up_to(int max_weight) {
  std::vector<Partition> out;
  for (int w = 0; w <= max_weight; ++w) {
    auto ps = partitions_of(w);
    out.insert(out.end(), ps.begin(), ps.end());
  }
  return out;
}

IntegerVector parse_integer_vector(std::string_view text) {
  std::string cleaned;
  for (char c : text)
    if (c != ' ' && c != '\t') cleaned.push_back(c);
  IntegerVector out;
  if (cleaned.empty()) return out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = cleaned.find(',', start);
    const std::string_view item = std::string_view(cleaned).substr(start, comma - start);
    int value = 0;
    const char* first = item.data();
    const char* last = item.data() + item.size();
    if (!item.empty() && item.front() == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (item.empty() || ec != std::errc{} || ptr != last)
      throw ParseError("malformed integer list '" + std::string(text) + "'");
    out.entries.push_back(value);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

Partition parse_partition(std::string_view text) {
  IntegerVector v = parse_integer_vector(text);
  try {
    return Partition(std::move(v.entries));
  } catch (const DomainError& e) {
    throw ParseError("'" + std::string(text) + "' is not a partition: " + e.what());
  }
}

}  // namespace jtvo
