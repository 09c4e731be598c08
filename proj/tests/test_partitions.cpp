#include "jtvo/errors.hpp"
#include "jtvo/partition.hpp"

#include <gtest/gtest.h>

#include <functional>
#include <set>

using jtvo::FrobeniusCoords;
using jtvo::IntegerVector;
using jtvo::Partition;
using jtvo::SignedPartition;

namespace {

// Number of partitions by Euler's pentagonal recurrence.
long partition_count(int n) {
  std::vector<long> p(static_cast<std::size_t>(n) + 1, 0);
  p[0] = 1;
  for (int m = 1; m <= n; ++m) {
    long total = 0;
    for (int k = 1;; ++k) {
      const int g1 = k * (3 * k - 1) / 2, g2 = k * (3 * k + 1) / 2;
      if (g1 > m) break;
      const long sign = (k % 2) ? 1 : -1;
      total += sign * p[static_cast<std::size_t>(m - g1)];
      if (g2 <= m) total += sign * p[static_cast<std::size_t>(m - g2)];
    }
    p[static_cast<std::size_t>(m)] = total;
  }
  return p[static_cast<std::size_t>(n)];
}

// Straightening by the two row rules alone: s_(.., a, b, ..) = -s_(.., b-1, a+1, ..)
// and s_(.., a, a+1, ..) = 0, padding with a zero when the last entry is negative.
SignedPartition exchange_rewrite(std::vector<int> v) {
  int sign = 1;
  for (int guard = 0; guard < 10000; ++guard) {
    while (!v.empty() && v.back() == 0) v.pop_back();
    if (!v.empty() && v.back() < 0) v.push_back(0);
    bool changed = false;
    for (std::size_t i = 0; i + 1 < v.size(); ++i) {
      if (v[i + 1] <= v[i]) continue;
      if (v[i + 1] == v[i] + 1) return {};
      const int a = v[i], b = v[i + 1];
      v[i] = b - 1;
      v[i + 1] = a + 1;
      sign = -sign;
      changed = true;
      break;
    }
    if (!changed) return {sign, Partition(v)};
  }
  ADD_FAILURE() << "rewriting did not terminate";
  return {};
}

}  // namespace

TEST(Partition, ValidatesInput) {
  EXPECT_THROW(Partition({1, 2}), jtvo::DomainError);
  EXPECT_THROW(Partition({2, -1}), jtvo::DomainError);
  EXPECT_EQ(Partition({3, 1, 0, 0}), Partition({3, 1}));
  EXPECT_EQ(Partition({3, 1}).part(5), 0);
  EXPECT_EQ(Partition({3, 2, 2, 2}).to_string(), "3,2,2,2");
  EXPECT_EQ(Partition().to_string(), "");
  EXPECT_EQ(Partition({4, 2}).weight(), 6);
}

TEST(Partition, Conjugate) {
  EXPECT_EQ(jtvo::conjugate(Partition({3, 1})), Partition({2, 1, 1}));
  EXPECT_EQ(jtvo::conjugate(Partition()), Partition());
  EXPECT_EQ(jtvo::conjugate(Partition({1, 1, 1, 1})), Partition({4}));
}

TEST(PartitionProperty, ConjugateIsAnInvolutionPreservingWeight) {
  for (const Partition& p : jtvo::partitions_up_to(10)) {
    const Partition c = jtvo::conjugate(p);
    EXPECT_EQ(jtvo::conjugate(c), p);
    EXPECT_EQ(c.weight(), p.weight());
    EXPECT_EQ(c.length(), p.part(1));
  }
}

TEST(Frobenius, Coordinates) {
  const FrobeniusCoords f = jtvo::to_frobenius(Partition({5, 4, 1}));
  EXPECT_EQ(f.alphas, (std::vector<int>{4, 2}));
  EXPECT_EQ(f.betas, (std::vector<int>{2, 0}));
  EXPECT_EQ(f.to_string(), "(4 2|2 0)");
  EXPECT_EQ(jtvo::to_frobenius(Partition()).rank(), 0);
}

TEST(Frobenius, RejectsBadLists) {
  EXPECT_THROW(jtvo::from_frobenius({{1, 2}, {1, 0}}), jtvo::DomainError);
  EXPECT_THROW(jtvo::from_frobenius({{1}, {1, 0}}), jtvo::DomainError);
  EXPECT_THROW(jtvo::from_frobenius({{-1}, {0}}), jtvo::DomainError);
}

TEST(FrobeniusProperty, RoundTripsAndTransposes) {
  for (const Partition& p : jtvo::partitions_up_to(10)) {
    const FrobeniusCoords f = jtvo::to_frobenius(p);
    EXPECT_EQ(jtvo::from_frobenius(f), p);
    const FrobeniusCoords c = jtvo::to_frobenius(jtvo::conjugate(p));
    EXPECT_EQ(c.alphas, f.betas);
    EXPECT_EQ(c.betas, f.alphas);
    int total = f.rank();
    for (int i = 0; i < f.rank(); ++i) total += f.alphas[static_cast<std::size_t>(i)] + f.betas[static_cast<std::size_t>(i)];
    EXPECT_EQ(total, p.weight());
  }
}

TEST(Partitions, EnumerationCountAndOrder) {
  for (int n = 0; n <= 14; ++n) {
    const auto ps = jtvo::partitions_of(n);
    EXPECT_EQ(static_cast<long>(ps.size()), partition_count(n)) << n;
    std::set<Partition> distinct(ps.begin(), ps.end());
    EXPECT_EQ(distinct.size(), ps.size());
    for (const Partition& p : ps) EXPECT_EQ(p.weight(), n);
    if (n > 0) {
      EXPECT_EQ(ps.front(), Partition({n}));
      EXPECT_EQ(ps.back(), Partition(std::vector<int>(static_cast<std::size_t>(n), 1)));
    }
  }
  EXPECT_EQ(jtvo::partitions_up_to(5).size(), 19u);
}

TEST(Straighten, Examples) {
  EXPECT_EQ(jtvo::straighten(IntegerVector{1, 2}).sign, 0);
  EXPECT_EQ(jtvo::straighten(IntegerVector{0, 2}), (SignedPartition{-1, Partition({1, 1})}));
  EXPECT_EQ(jtvo::straighten(IntegerVector{2, 1}), (SignedPartition{1, Partition({2, 1})}));
  EXPECT_EQ(jtvo::straighten(IntegerVector{-1}).sign, 0);
  EXPECT_EQ(jtvo::straighten(IntegerVector{-2}).sign, 0);
  EXPECT_EQ(jtvo::straighten(IntegerVector{-1, 2}), (SignedPartition{-1, Partition({1})}));
  EXPECT_EQ(jtvo::straighten(IntegerVector{}), (SignedPartition{1, Partition()}));
  EXPECT_EQ(jtvo::straighten(IntegerVector{3, 0, 0}), (SignedPartition{1, Partition({3})}));
}

TEST(StraightenProperty, AgreesWithExchangeRewriting) {
  std::vector<int> v;
  std::function<void(std::size_t)> sweep = [&](std::size_t len) {
    if (v.size() == len) {
      EXPECT_EQ(jtvo::straighten(IntegerVector(v)), exchange_rewrite(v)) << IntegerVector(v).to_string();
      return;
    }
    for (int x = -3; x <= 6; ++x) {
      v.push_back(x);
      sweep(len);
      v.pop_back();
    }
  };
  for (std::size_t len = 0; len <= 4; ++len) sweep(len);
}

TEST(StraightenProperty, PartitionsAreFixedPoints) {
  for (const Partition& p : jtvo::partitions_up_to(8))
    EXPECT_EQ(jtvo::straighten(IntegerVector(p)), (SignedPartition{1, p}));
}

TEST(Parse, IntegerVectorsAndPartitions) {
  EXPECT_EQ(jtvo::parse_integer_vector(" -1, 2 ,3"), (IntegerVector{-1, 2, 3}));
  EXPECT_EQ(jtvo::parse_integer_vector(""), IntegerVector{});
  EXPECT_EQ(jtvo::parse_partition("2,1"), Partition({2, 1}));
  EXPECT_THROW(jtvo::parse_integer_vector("1,,2"), jtvo::ParseError);
  EXPECT_THROW(jtvo::parse_integer_vector("a"), jtvo::ParseError);
  EXPECT_THROW(jtvo::parse_partition("1,2"), jtvo::ParseError);
}
