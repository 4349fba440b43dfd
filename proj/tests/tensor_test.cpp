#include <gtest/gtest.h>

#include "llf/sweeps.hpp"
#include "llf/tensor.hpp"
#include "support/generators.hpp"

using namespace llf;

namespace {

CQ cq(int num, int den = 1) { return CQ{QQ(num, den)}; }

WDRep single(WDIndec v, Field f) {
  WDRep out(f);
  out.add(std::move(v));
  return out;
}

std::vector<Block> tensorable(Field f) {
  std::vector<Block> out;
  for (auto& b : enumerate_blocks(GridSpec::defaults(f)))
    if (!is_opaque(b)) out.push_back(std::move(b));
  return out;
}

}  // namespace

TEST(ToWd, Examples) {
  for (int n = 1; n <= 4; ++n)
    EXPECT_EQ(to_wd(steinberg(QQ(-1, 2), n)), single(SpecialRep{Unramified{QQ(-1, 2), {}}, n}, Field::nonarch));
  EXPECT_EQ(to_wd(induced(2, cq(0))), single(ArchInduced{2, cq(0)}, Field::real));
  EXPECT_EQ(to_wd(induced(2, cq(0))).dimension(), 2);
  EXPECT_THROW(to_wd(segment(Opaque{2, QQ(0)}, 1)), UnsupportedForTensor);
}

TEST(ToWd, LFactorMatchesGodementJacquet) {
  testgen::Gen gen(30);
  for (int i = 0; i < 200; ++i) {
    Block b = gen.tensorable_block(gen.field());
    EXPECT_EQ(lfactor(to_wd(b)), gj_lfactor(b)) << format(b);
    EXPECT_EQ(to_wd(b).dimension(), degree(b));
  }
}

TEST(ExpandIndZero, TrivialPlusSign) {
  WDRep v = expand_ind_zero(cq(0));
  WDRep expected(Field::real);
  expected.add(ArchChar{Field::real, 0, cq(0)});
  expected.add(ArchChar{Field::real, 1, cq(0)});
  EXPECT_EQ(v, expected);
}

TEST(ExpandIndZero, LFactorHasGammaCPoleSet) {
  const auto points = testgen::rational_points(10, 4);
  for (const auto& r : testgen::rational_points(3, 2)) {
    LFactor l = lfactor(expand_ind_zero(CQ{r}));
    EXPECT_EQ(l, (LFactor{GammaR{CQ{r}}, GammaR{CQ{r + 1}}}));
    for (const auto& s0 : points) ASSERT_EQ(pole_order(l, s0).order, pole_order(LFactor{GammaC{CQ{r}}}, s0).order);
  }
}

TEST(ExpandIndZero, DualIsComponentwise) {
  testgen::Gen gen(31);
  for (int i = 0; i < 50; ++i) {
    CQ r = gen.complex_rational();
    EXPECT_EQ(dual(expand_ind_zero(r)), expand_ind_zero(-r));
  }
}

TEST(Tensor, InducedTimesInducedDistinctM) {
  // Ind chi_{m1,r1} (x) Ind chi_{m2,r2} = Ind chi_{m1+m2} + Ind chi_{|m1-m2|}
  for (int m1 = 1; m1 <= 4; ++m1)
    for (int m2 = 1; m2 <= 4; ++m2) {
      if (m1 == m2) continue;
      CQ r1 = cq(m1, 2), r2 = CQ{QQ(-1), QQ(m2, 3)};
      WDRep v = tensor(to_wd(induced(m1, r1)), to_wd(induced(m2, r2)));
      WDRep expected(Field::real);
      expected.add(ArchInduced{m1 + m2, r1 + r2});
      expected.add(ArchInduced{std::abs(m1 - m2), r1 + r2});
      EXPECT_EQ(v, expected);
      EXPECT_EQ(lfactor(v), (LFactor{GammaC{r1 + r2 + QQ(m1 + m2, 2)}, GammaC{r1 + r2 + QQ(std::abs(m1 - m2), 2)}}));
    }
}

TEST(Tensor, InducedTimesInducedEqualMExpands) {
  CQ r1 = cq(1, 2), r2 = cq(-3, 2);
  WDRep v = tensor(to_wd(induced(3, r1)), to_wd(induced(3, r2)));
  WDRep expected = expand_ind_zero(r1 + r2);
  expected.add(ArchInduced{6, r1 + r2});
  EXPECT_EQ(v, expected);
}

TEST(Tensor, InducedTimesCharacterIgnoresSign) {
  for (int m1 = 1; m1 <= 3; ++m1)
    for (int m2 = 0; m2 <= 1; ++m2) {
      WDRep v = tensor(to_wd(induced(m1, cq(1, 2))), to_wd(real_char(m2, cq(-1))));
      EXPECT_EQ(v, single(ArchInduced{m1, cq(-1, 2)}, Field::real));
    }
}

TEST(Tensor, SegmentsFollowClebschGordan) {
  // (chi1 (x) Sp(3)) (x) (chi2 (x) Sp(2)) = Sp(4) + Sp(2) with tops c1+c2 and c1+c2-1
  WDRep v = tensor(to_wd(segment(Unramified{QQ(1, 2), RootOfUnity(2, 1)}, 3)),
                   to_wd(segment(Unramified{QQ(1), RootOfUnity(4, 1)}, 2)));
  WDRep expected(Field::nonarch);
  expected.add(SpecialRep{Unramified{QQ(3, 2), RootOfUnity(4, 3)}, 4});
  expected.add(SpecialRep{Unramified{QQ(1, 2), RootOfUnity(4, 3)}, 2});
  EXPECT_EQ(v, expected);
  WDRep ram = tensor(to_wd(Block(Segment{Ramified{QQ(1)}, 1})), to_wd(steinberg(QQ(2), 1)));
  EXPECT_EQ(ram, single(SpecialRep{Ramified{QQ(3)}, 1}, Field::nonarch));
}

TEST(Tensor, MixedFieldsRejected) {
  EXPECT_THROW(tensor(to_wd(real_char(0, cq(0))), to_wd(complex_char(0, cq(0)))), FieldMismatch);
  EXPECT_THROW(rs_lfactor(real_char(0, cq(0)), steinberg(QQ(0), 1)), FieldMismatch);
}

class TensorLaws : public ::testing::TestWithParam<Field> {};

TEST_P(TensorLaws, CommutativeAndDimensionMultiplicativeOnDefaultGrid) {
  const auto blocks = tensorable(GetParam());
  for (const auto& a : blocks)
    for (const auto& b : blocks) {
      WDRep va = to_wd(a), vb = to_wd(b);
      WDRep ab = tensor(va, vb);
      ASSERT_EQ(ab, tensor(vb, va)) << format(a) << " , " << format(b);
      ASSERT_EQ(ab.dimension(), va.dimension() * vb.dimension());
    }
}

TEST_P(TensorLaws, RankinSelbergSymmetricAndDualCompatible) {
  const auto blocks = tensorable(GetParam());
  for (std::size_t i = 0; i < blocks.size(); i += 3)
    for (std::size_t j = 0; j < blocks.size(); j += 2) {
      const Block &a = blocks[i], &b = blocks[j];
      ASSERT_EQ(rs_lfactor(a, b), rs_lfactor(b, a));
      ASSERT_EQ(rs_lfactor(dual(a), dual(b)), lfactor(dual(tensor(to_wd(a), to_wd(b)))));
    }
}

INSTANTIATE_TEST_SUITE_P(Fields, TensorLaws, ::testing::Values(Field::real, Field::complex, Field::nonarch),
                         [](const auto& info) { return std::string(to_string(info.param)); });

TEST(TensorLaws, RandomProductsDimension) {
  testgen::Gen gen(33);
  for (int i = 0; i < 100; ++i) {
    Field f = gen.field();
    WDRep v(f), w(f);
    const RepProduct pv = gen.product(f, 3, true), pw = gen.product(f, 3, true);
    for (const auto& b : pv.blocks()) v.add_all(to_wd(b));
    for (const auto& b : pw.blocks()) w.add_all(to_wd(b));
    EXPECT_EQ(tensor(v, w).dimension(), v.dimension() * w.dimension());
    EXPECT_EQ(tensor(v, w), tensor(w, v));
  }
}

TEST(TensorLaws, ArchimedeanDualFlipsExponentSigns) {
  // Over R and C, L(s, b1^vee x b2^vee) is L(s, b1 x b2) with every r negated.
  LFactor l = rs_lfactor(dual(induced(2, cq(1, 2))), dual(real_char(1, cq(1))));
  EXPECT_EQ(l, (LFactor{GammaC{cq(-1, 2)}}));
  EXPECT_EQ(rs_lfactor(induced(2, cq(1, 2)), real_char(1, cq(1))), (LFactor{GammaC{cq(5, 2)}}));
}

TEST(RsLFactor, Examples) {
  EXPECT_EQ(rs_lfactor(steinberg(QQ(-1, 2), 1), steinberg(QQ(-1, 2), 1)), (LFactor{Euler{QQ(-1), {}}}));
  EXPECT_EQ(rs_lfactor(real_char(0, cq(-1, 2)), real_char(0, cq(-1, 2))), (LFactor{GammaR{cq(-1)}}));
  EXPECT_EQ(pole_order(rs_lfactor(real_char(0, cq(-1, 2)), real_char(0, cq(-1, 2))), QQ(1)).order, 1);
  for (int m1 = 1; m1 <= 3; ++m1)
    EXPECT_EQ(rs_lfactor(induced(m1, cq(-1)), real_char(1, cq(1, 2))), (LFactor{GammaC{cq(-1, 2) + QQ(m1, 2)}}));
}

TEST(RsLFactor, OpaqueDegradesToOne) {
  LFactor l = rs_lfactor(segment(Opaque{2, QQ(0)}, 1), steinberg(QQ(-1, 2), 1));
  EXPECT_TRUE(l.empty());
  EXPECT_TRUE(l.opaque_degraded());
  RepProduct mixed({segment(Opaque{2, QQ(0)}, 1), steinberg(QQ(-1, 2), 1)});
  LFactor m = rs_lfactor(mixed, RepProduct(steinberg(QQ(-1, 2), 1)));
  EXPECT_EQ(m, (LFactor{Euler{QQ(-1), {}}}));
  EXPECT_TRUE(m.opaque_degraded());
}

TEST(RsLFactor, SteinbergPolesReproduceShiftedProduct) {
  // Poles of L(s, St_{n1}(|.|^{-1/2}) x St_{n2}(|.|^{-1/2})) versus
  // prod_{j<n2} L(s + j, |.|^{-n2}), i.e. poles 1..n2 each simple.
  for (int n1 = 1; n1 <= 6; ++n1)
    for (int n2 = 1; n2 <= n1; ++n2) {
      LFactor rs = rs_lfactor(steinberg(QQ(-1, 2), n1), steinberg(QQ(-1, 2), n2));
      LFactor reference;
      for (int j = 0; j < n2; ++j) reference = multiply(reference, shift(LFactor{Euler{QQ(-n2), {}}}, QQ(j)));
      auto got = real_poles(rs, QQ(-100));
      EXPECT_EQ(got, real_poles(reference, QQ(-100))) << n1 << "," << n2;
      ASSERT_EQ(got.size(), static_cast<std::size_t>(n2));
      for (int k = 1; k <= n2; ++k) EXPECT_EQ(got[QQ(k)], 1);
    }
}

TEST(RsLFactor, MutationDropsLeadingSummand) {
  LFactor rs = rs_lfactor(steinberg(QQ(-1, 2), 3), steinberg(QQ(-1, 2), 2), Mutation::drop_leading_cg_summand);
  EXPECT_EQ(pole_order(rs, QQ(1)).order, 0);
  EXPECT_EQ(pole_order(rs, QQ(2)).order, 1);
}
