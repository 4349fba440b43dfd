#include <gtest/gtest.h>

#include "llf/predicates.hpp"
#include "llf/sweeps.hpp"
#include "support/generators.hpp"

using namespace llf;

namespace {
CQ cq(int num, int den = 1) { return CQ{QQ(num, den)}; }
}  // namespace

TEST(HasPoleAtHalf, Examples) {
  EXPECT_EQ(has_pole_at_half(RepProduct(steinberg(QQ(-1, 2), 1))).order, 1);
  EXPECT_EQ(has_pole_at_half(RepProduct(real_char(1, cq(0)))).order, 0);
  for (int n = 1; n <= 6; ++n) EXPECT_EQ(has_pole_at_half(RepProduct(steinberg(QQ(-1, 2), n))).order, 1);
  auto r = has_pole_at_half(RepProduct({real_char(0, cq(-1, 2)), real_char(0, cq(-1, 2))}));
  EXPECT_EQ(r.order, 2);
  EXPECT_EQ(r.s, QQ(1, 2));
}

TEST(ThetaCertificate, NonSelfDualSteinbergIsCertifiedFromDualSide) {
  for (int n = 1; n <= 6; ++n) {
    ThetaCertificate c = theta_certificate(RepProduct(steinberg(QQ(-1, 2), n)));
    EXPECT_EQ(c.sigma_pole_at_half.order, 1);
    EXPECT_EQ(c.dual_pole_at_half.order, 0);
    EXPECT_TRUE(c.certified);
    EXPECT_NE(c.reason.find("dual side has no pole at 1/2"), std::string::npos);
  }
}

TEST(ThetaCertificate, TrivialCharacterAndDeclinedPair) {
  EXPECT_TRUE(theta_certificate(RepProduct(real_char(0, cq(0)))).certified);
  ThetaCertificate c = theta_certificate(RepProduct({real_char(0, cq(-1, 2)), real_char(0, cq(1, 2))}));
  // Oracle: both sides contain Gamma_R(s - 1/2).
  EXPECT_EQ(c.sigma_pole_at_half.order, pole_order(LFactor{GammaR{cq(-1, 2)}}, QQ(1, 2)).order);
  EXPECT_EQ(c.dual_pole_at_half.order, 1);
  EXPECT_FALSE(c.certified);
  EXPECT_NE(c.reason.find("inconclusive"), std::string::npos);
}

TEST(ThetaCertificate, TrivialRepresentationOfGl2Declines) {
  // The trivial representation of GL_2(F) is the Langlands quotient of
  // |.|^{1/2} x |.|^{-1/2}; its L-factor has poles at 1/2 on both sides.
  ThetaCertificate c = theta_certificate(RepProduct({steinberg(QQ(1, 2), 1), steinberg(QQ(-1, 2), 1)}));
  EXPECT_FALSE(c.certified);
}

TEST(ThetaCertificate, SymmetricUnderDual) {
  testgen::Gen gen(40);
  for (int i = 0; i < 500; ++i) {
    RepProduct rho = gen.product(gen.field(), 3);
    ThetaCertificate c = theta_certificate(rho);
    EXPECT_EQ(c.certified, theta_certificate(dual(rho)).certified);
    EXPECT_EQ(c.certified, c.sigma_pole_at_half.order == 0 || c.dual_pole_at_half.order == 0);
  }
}

TEST(PairReducible, Examples) {
  EXPECT_TRUE(pair_reducible(steinberg(QQ(1, 2), 1), steinberg(QQ(-1, 2), 1)).value);
  // Oracle: the oriented factor is Euler(s - 1).
  EXPECT_EQ(rs_lfactor(dual(steinberg(QQ(1, 2), 1)), steinberg(QQ(-1, 2), 1)), (LFactor{Euler{QQ(-1), {}}}));
  EXPECT_FALSE(pair_reducible(real_char(0, cq(0)), real_char(0, cq(0))).value);
  EXPECT_TRUE(pair_reducible(real_char(0, cq(-1, 2)), real_char(0, cq(1, 2))).value);
  EXPECT_EQ(rs_lfactor(dual(real_char(0, cq(1, 2))), real_char(0, cq(-1, 2))), (LFactor{GammaR{cq(-1)}}));
  EXPECT_THROW(pair_reducible(real_char(0, cq(0)), complex_char(0, cq(0))), FieldMismatch);
}

TEST(PairReducible, ClassicalNonarchimedeanLinkage) {
  // For GL_1 characters |.|^a x |.|^b (zeta = 1) reducibility happens iff |a - b| = 1.
  for (const auto& a : testgen::rational_points(3, 2))
    for (const auto& b : testgen::rational_points(3, 2)) {
      QQ d = a - b;
      bool linked = d == 1 || d == -1;
      EXPECT_EQ(pair_reducible(steinberg(a, 1), steinberg(b, 1)).value, linked) << to_string(a) << " " << to_string(b);
    }
}

TEST(PairReducible, OpaqueIsDegradedNotReducible) {
  Verdict v = pair_reducible(segment(Opaque{2, QQ(1, 2)}, 1), steinberg(QQ(-1, 2), 1));
  EXPECT_FALSE(v.value);
  EXPECT_TRUE(v.opaque_degraded);
}

TEST(PairReducible, SymmetricOnDefaultGrids) {
  for (Field f : {Field::real, Field::complex, Field::nonarch}) {
    const auto blocks = enumerate_blocks(GridSpec::defaults(f));
    for (std::size_t i = 0; i < blocks.size(); i += 2)
      for (std::size_t j = 0; j < blocks.size(); j += 3)
        ASSERT_EQ(pair_reducible(blocks[i], blocks[j]), pair_reducible(blocks[j], blocks[i]));
  }
}

TEST(IsIrreducibleProduct, Examples) {
  EXPECT_TRUE(is_irreducible_product(RepProduct(steinberg(QQ(-1, 2), 3))).value);
  EXPECT_FALSE(is_irreducible_product(RepProduct({real_char(0, cq(-1, 2)), real_char(0, cq(1, 2))})).value);
  EXPECT_TRUE(is_irreducible_product(RepProduct({real_char(0, cq(0)), real_char(1, cq(0))})).value);
  Verdict v = is_irreducible_product(RepProduct({segment(Opaque{2, QQ(0)}, 1), steinberg(QQ(0), 1), steinberg(QQ(1), 1)}));
  EXPECT_FALSE(v.value);
  EXPECT_TRUE(v.opaque_degraded);
}

TEST(TemperedSanity, DualPairsHaveNoPositivePoles) {
  const auto points = positive_test_points();
  for (Field f : {Field::real, Field::complex, Field::nonarch}) {
    std::vector<Block> tempered;
    for (auto& b : enumerate_blocks(GridSpec::defaults(f)))
      if (exponent_e(b) == 0 && !is_opaque(b)) tempered.push_back(b);
    ASSERT_FALSE(tempered.empty());
    for (const auto& a : tempered)
      for (const auto& b : tempered) {
        LFactor l = rs_lfactor(dual(a), b);
        for (const auto& s0 : points) ASSERT_EQ(pole_order(l, s0).order, 0) << format(a) << " " << format(b);
      }
  }
}

TEST(Pat1Property, PolesAtHalfForcePoleAtOne) {
  for (Field f : {Field::real, Field::complex, Field::nonarch}) {
    const auto blocks = enumerate_blocks(GridSpec::defaults(f));
    std::vector<Block> singular;
    for (const auto& b : blocks)
      if (has_pole_at_half(RepProduct(b)).order >= 1) singular.push_back(b);
    ASSERT_FALSE(singular.empty());
    for (const auto& a : singular)
      for (const auto& b : singular) ASSERT_GE(pole_order(rs_lfactor(a, b), QQ(1)).order, 1);
  }
}
