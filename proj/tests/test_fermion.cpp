#include "jtvo/fermion.hpp"

#include <gtest/gtest.h>

using jtvo::BosonState;
using jtvo::Coefficient;
using jtvo::FermionState;
using jtvo::Partition;

TEST(Fermion, IndexSequence) {
  EXPECT_EQ(jtvo::wedge_indices(0, Partition({2, 1}), 4), (std::vector<int>{2, 0, -2, -3}));
  EXPECT_EQ(jtvo::wedge_indices(-2, Partition({3, 1}), 3), (std::vector<int>{1, -2, -4}));
  EXPECT_EQ(FermionState::basis(0, Partition({2, 1})).to_string(), "v_2^v_0^|-2>");
  EXPECT_EQ(FermionState::vacuum(1).to_string(), "|1>");
}

TEST(Fermion, WedgeExamples) {
  for (int m = -3; m <= 3; ++m) {
    EXPECT_EQ(jtvo::f_psi(m + 1, FermionState::vacuum(m)), FermionState::vacuum(m + 1));
    EXPECT_TRUE(jtvo::f_psi(m, FermionState::vacuum(m)).is_zero());
    EXPECT_TRUE(jtvo::f_psi(m - 4, FermionState::vacuum(m)).is_zero());
  }
  // v_3 ^ |0> has lambda = (3 - 0 - 1) = (2) in charge 1.
  EXPECT_EQ(jtvo::f_psi(3, FermionState::vacuum(0)), FermionState::basis(1, Partition({2})));
  // v_1 wedged in front of v_3 ^ |0> moves past one factor.
  EXPECT_EQ(jtvo::f_psi(1, FermionState::basis(1, Partition({2}))), FermionState::basis(2, Partition({1}), -1));
}

TEST(Fermion, ContractionExamples) {
  for (int m = -3; m <= 3; ++m) {
    EXPECT_EQ(jtvo::f_psi_star(m, FermionState::vacuum(m)), FermionState::vacuum(m - 1));
    EXPECT_TRUE(jtvo::f_psi_star(m + 1, FermionState::vacuum(m)).is_zero());
    EXPECT_EQ(jtvo::f_psi_star(m - 1, FermionState::vacuum(m)), FermionState::basis(m - 1, Partition({1}), -1));
    for (int k = m + 1; k <= m + 4; ++k)
      EXPECT_EQ(jtvo::f_psi_star(k, jtvo::f_psi(k, FermionState::vacuum(m))), FermionState::vacuum(m));
  }
}

TEST(Fermion, BernsteinWordThroughTheCorrespondence) {
  for (const Partition& lambda : jtvo::partitions_up_to(5))
    EXPECT_EQ(jtvo::f_apply(jtvo::bernstein_creation_word(lambda), FermionState::vacuum(0)),
              FermionState::basis(lambda.length(), lambda));
}

TEST(Correspondence, Relabeling) {
  EXPECT_EQ(jtvo::correspond(FermionState::vacuum(2)), BosonState::basis(Partition(), 2));
  EXPECT_EQ(jtvo::correspond(FermionState::basis(-2, Partition({3, 1}))), BosonState::basis(Partition({3, 1}), -2));
  const FermionState combo = FermionState::basis(0, Partition({1}), 3) + FermionState::basis(1, Partition(), Coefficient(-1, 2));
  const BosonState image = jtvo::correspond(combo);
  EXPECT_EQ(image, BosonState::basis(Partition({1}), 0, 3) + BosonState::basis(Partition(), 1, Coefficient(-1, 2)));
  EXPECT_EQ(jtvo::correspond(image), combo);
}

TEST(CorrespondenceProperty, IntertwinesTheCliffordAction) {
  const jtvo::SchurEngine engine(jtvo::GeneratorFamily::classical());
  const jtvo::BosonFock fock(engine);
  for (const Partition& lambda : jtvo::partitions_up_to(4))
    for (int m = -2; m <= 2; ++m)
      for (int k = -6; k <= 6; ++k) {
        const FermionState f = FermionState::basis(m, lambda);
        const BosonState b = jtvo::correspond(f);
        EXPECT_EQ(jtvo::correspond(jtvo::f_psi(k, f)), fock.psi(k, b)) << lambda << "@" << m << " k=" << k;
        EXPECT_EQ(jtvo::correspond(jtvo::f_psi_star(k, f)), fock.psi_star(k, b)) << lambda << "@" << m << " k=" << k;
      }
}
