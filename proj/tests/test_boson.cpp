#include "jtvo/boson.hpp"
#include "jtvo/errors.hpp"

#include <gtest/gtest.h>

using jtvo::BosonFock;
using jtvo::BosonState;
using jtvo::Coefficient;
using jtvo::FamilyPtr;
using jtvo::GeneratorFamily;
using jtvo::OperatorWord;
using jtvo::Partition;
using jtvo::Poly;
using jtvo::SchurEngine;

namespace {

BosonState vac(int m = 0) { return BosonState::basis(Partition(), m); }

std::vector<FamilyPtr> families() {
  return {GeneratorFamily::classical(), GeneratorFamily::lie_character(), GeneratorFamily::shifted(),
          GeneratorFamily::linear_recurrence({1, 1})};
}

Poly h(int i) {
  return i == 0 ? Poly(1) : (i < 0 ? Poly() : Poly::generator(jtvo::GeneratorId(jtvo::Tag::h(), i)));
}

struct Classical : ::testing::Test {
  SchurEngine engine{GeneratorFamily::classical()};
  BosonFock fock{engine};
};

}  // namespace

TEST_F(Classical, PsiExamples) {
  EXPECT_EQ(fock.psi(3, vac()), BosonState::basis(Partition({2}), 1));
  // k - m - 1 = lambda_1 - 1 repeats a staircase value.
  EXPECT_TRUE(fock.psi(2, BosonState::basis(Partition({2}), 0)).is_zero());
  EXPECT_EQ(fock.psi_star(0, vac()), vac(-1));
  EXPECT_TRUE(fock.psi_star(1, vac()).is_zero());
  EXPECT_EQ(fock.psi_star(-1, vac()), BosonState::basis(Partition({1}), -1, -1));
}

TEST_F(Classical, WordsApplyRightToLeft) {
  const BosonState v = BosonState::basis(Partition({2, 1}), 0);
  EXPECT_EQ(fock.apply(OperatorWord{}, v), v);
  const OperatorWord w = OperatorWord::parse("psistar:4, psi:4");
  EXPECT_EQ(fock.apply(w, v), fock.psi_star(4, fock.psi(4, v)));
  for (int k = -5; k <= 5; ++k) {
    EXPECT_TRUE(fock.apply(OperatorWord{{{jtvo::FermionKind::Psi, k}, {jtvo::FermionKind::Psi, k}}}, v).is_zero());
    EXPECT_EQ(fock.psi(k, fock.psi_star(k, v)) + fock.psi_star(k, fock.psi(k, v)), v);
  }
}

TEST_F(Classical, BernsteinExamples) {
  // psi_3 psi_1 |0> = s_(2,1) z^2
  EXPECT_EQ(jtvo::bernstein_creation_word(Partition({2, 1})).to_string(), "psi:4,psi:2");
  EXPECT_EQ(fock.apply(jtvo::bernstein_creation_word(Partition({2, 1})), vac()), BosonState::basis(Partition({2, 1}), 2));
  EXPECT_EQ(fock.apply(jtvo::bernstein_creation_word(Partition({2})), vac()), BosonState::basis(Partition({2}), 1));
  EXPECT_EQ(fock.apply(jtvo::bernstein_annihilation_word(Partition({2, 1})), vac()),
            BosonState::basis(Partition({2, 1}), -2, -1));
  EXPECT_EQ(fock.apply(jtvo::bernstein_annihilation_word(Partition({2})), vac()), BosonState::basis(Partition({1, 1}), -1));
  EXPECT_EQ(fock.apply(jtvo::bernstein_annihilation_word(Partition({1, 1})), vac()), BosonState::basis(Partition({2}), -2));
}

TEST(BernsteinProperty, AllFamiliesUpToWeightFive) {
  for (const FamilyPtr& f : families()) {
    const SchurEngine engine(f);
    const BosonFock fock(engine);
    for (const Partition& lambda : jtvo::partitions_up_to(5)) {
      const int l = lambda.length();
      EXPECT_EQ(fock.apply(jtvo::bernstein_creation_word(lambda), vac()), BosonState::basis(lambda, l));
      EXPECT_EQ(fock.apply(jtvo::bernstein_annihilation_word(lambda), vac()),
                BosonState::basis(jtvo::conjugate(lambda), -l, jtvo::sign_power(lambda.weight())));
    }
  }
}

TEST_F(Classical, SkewExamples) {
  EXPECT_EQ(fock.d_skew(0, Partition()), Poly(1));
  EXPECT_TRUE(fock.d_skew(1, Partition()).is_zero());
  EXPECT_TRUE(fock.d_skew(2, Partition({1})).is_zero());
  EXPECT_TRUE(fock.d_skew(-1, Partition({1})).is_zero());
}

// D_p s_lambda = det[h_{lambda_i - nu_j - i + j}] with nu = (1^p).
TEST_F(Classical, SkewMatchesSkewJacobiTrudi) {
  for (const Partition& lambda : jtvo::partitions_up_to(5)) {
    const int l = lambda.length();
    for (int p = 0; p <= l; ++p) {
      const auto n = static_cast<std::size_t>(l);
      const Poly expected = jtvo::det(jtvo::PolyMatrix::generate(n, n, [&](std::size_t i, std::size_t j) {
        const int ii = static_cast<int>(i) + 1, jj = static_cast<int>(j) + 1;
        return h(lambda.part(ii) - (jj <= p ? 1 : 0) - ii + jj);
      }));
      EXPECT_EQ(fock.d_skew(p, lambda), expected) << lambda << " p=" << p;
    }
  }
}

TEST(UpperProperty, VanishingRules) {
  for (const FamilyPtr& f : families()) {
    const SchurEngine engine(f);
    const BosonFock fock(engine);
    EXPECT_EQ(fock.d_upper(-1, Partition()), Poly(1)) << f->name();
    for (int p = -4; p <= 3; ++p)
      if (p != -1) {
        EXPECT_TRUE(fock.d_upper(p, Partition()).is_zero()) << f->name() << " p=" << p;
      }
    for (const Partition& lambda : jtvo::partitions_up_to(4)) {
      for (int p = 0; p <= 3; ++p) EXPECT_TRUE(fock.d_upper(p, lambda).is_zero()) << f->name() << " " << lambda << " p=" << p;
      for (int q = lambda.part(1) + 2; q <= lambda.part(1) + 4; ++q)
        EXPECT_TRUE(fock.d_upper(-q, lambda).is_zero()) << f->name() << " " << lambda << " p=" << -q;
    }
  }
}

TEST_F(Classical, AlphaZeroIsCharge) {
  for (const Partition& lambda : jtvo::partitions_up_to(4))
    for (int m = -2; m <= 2; ++m) {
      const BosonState v = BosonState::basis(lambda, m);
      EXPECT_EQ(fock.alpha(0, v), Coefficient(m) * v);
    }
}

// alpha_{-k} multiplies by the power sum p_k (Murnaghan-Nakayama), with
// p_1 = h1, p_2 = 2 h2 - h1^2, p_3 = 3 h3 - 3 h1 h2 + h1^3.
TEST_F(Classical, AlphaNegativeIsPowerSumMultiplication) {
  const std::vector<Poly> power_sum{Poly(), h(1), Coefficient(2) * h(2) - h(1) * h(1),
                                    Coefficient(3) * h(3) - Coefficient(3) * h(1) * h(2) + h(1) * h(1) * h(1)};
  for (const Partition& lambda : jtvo::partitions_up_to(4))
    for (int k = 1; k <= 3; ++k) {
      const BosonState v = BosonState::basis(lambda, 1);
      EXPECT_EQ(fock.expand_at(fock.alpha(-k, v), 1), power_sum[static_cast<std::size_t>(k)] * engine.schur(lambda))
          << lambda << " k=" << k;
    }
}

TEST_F(Classical, HeisenbergExamples) {
  const BosonState v = BosonState::basis(Partition({2, 1}), 1);
  EXPECT_EQ(fock.alpha(1, fock.alpha(-1, v)) - fock.alpha(-1, fock.alpha(1, v)), v);
  EXPECT_TRUE((fock.alpha(2, fock.alpha(1, v)) - fock.alpha(1, fock.alpha(2, v))).is_zero());
  EXPECT_EQ(fock.alpha(2, fock.alpha(-2, v)) - fock.alpha(-2, fock.alpha(2, v)), Coefficient(2) * v);
}

TEST(BosonState, ArithmeticAndRendering) {
  BosonState s = BosonState::basis(Partition({2, 1}), 0) + BosonState::basis(Partition(), -1, Coefficient(-3, 2));
  EXPECT_EQ(s.to_string(), "-3/2*[]@-1 + [2,1]@0");
  EXPECT_EQ(BosonState().to_string(), "0");
  EXPECT_TRUE((s - s).is_zero());
  EXPECT_EQ(s.coefficient({Partition({2, 1}), 0}), Coefficient(1));
  EXPECT_EQ(s.coefficient({Partition({5}), 0}), Coefficient(0));
  EXPECT_EQ(jtvo::parse_state_expression(s.to_string()), s);
  EXPECT_EQ(jtvo::parse_state_expression("-[1]@1"), BosonState::basis(Partition({1}), 1, -1));
  EXPECT_EQ(jtvo::parse_state_expression("0"), BosonState());
}

TEST(Parsing, StatesAndWords) {
  EXPECT_EQ(jtvo::parse_state("2,1@0"), BosonState::basis(Partition({2, 1}), 0));
  EXPECT_EQ(jtvo::parse_state("@-1"), vac(-1));
  EXPECT_THROW(jtvo::parse_state("2,1"), jtvo::ParseError);
  EXPECT_THROW(jtvo::parse_state("2,1@x"), jtvo::ParseError);
  EXPECT_THROW(jtvo::parse_state("1,2@0"), jtvo::ParseError);
  const OperatorWord w = OperatorWord::parse("psi:3, psistar:-2");
  ASSERT_EQ(w.letters.size(), 2u);
  EXPECT_EQ(w.letters[1], (jtvo::Letter{jtvo::FermionKind::PsiStar, -2}));
  EXPECT_EQ(w.to_string(), "psi:3,psistar:-2");
  EXPECT_TRUE(OperatorWord::parse("").letters.empty());
  EXPECT_THROW(OperatorWord::parse("phi:3"), jtvo::ParseError);
  EXPECT_THROW(OperatorWord::parse("psi3"), jtvo::ParseError);
  EXPECT_THROW(OperatorWord::parse("psi:"), jtvo::ParseError);
}
