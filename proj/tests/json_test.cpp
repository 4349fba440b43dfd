#include <gtest/gtest.h>

#include "llf/json_io.hpp"
#include "llf/predicates.hpp"
#include "support/generators.hpp"

using namespace llf;

TEST(JsonReport, RoundTripIsExact) {
  testgen::Gen gen(11);
  for (int i = 0; i < 300; ++i) {
    RepProduct rho = gen.product(gen.field(), 3);
    LFactor l = gj_lfactor(rho);
    JsonReport r;
    r.command = "lfactor";
    r.input = {format(rho)};
    r.lfactor = l.terms();
    for (const auto& [s, k] : real_poles(l, QQ(-4))) r.poles.push_back({s, k});
    if (i % 2) r.certificate = theta_certificate(rho);
    if (l.opaque_degraded()) r.flags.push_back("opaque_degraded");
    json j = r;
    JsonReport back = json::parse(j.dump()).get<JsonReport>();
    ASSERT_EQ(back, r) << j.dump();
  }
}

TEST(JsonReport, Shape) {
  JsonReport r;
  r.command = "pole";
  r.input = {"st(unram(-1/2),1)"};
  r.lfactor = LFactor{Euler{QQ(-1, 2), {}}}.terms();
  r.poles = {{QQ(1, 2), 1}};
  json j = r;
  EXPECT_EQ(j.at("version"), 1);
  EXPECT_TRUE(j.at("certificate").is_null());
  EXPECT_EQ(j.at("poles")[0].at("s"), "1/2");
  EXPECT_EQ(j.at("lfactor")[0].at("mult"), 1);
  EXPECT_EQ(j.at("lfactor")[0].at("atom").at("kind"), "EULER");
  EXPECT_EQ(j.at("lfactor")[0].at("atom").at("text"), "Euler(s - 1/2)");
  j["version"] = 2;
  EXPECT_THROW(j.get<JsonReport>(), InvalidParameter);
}

TEST(JsonAtoms, LargeRationalsSurvive) {
  QQ big(ZZ("123456789012345678901234567890"), ZZ("98765432109876543210987"));
  LFactor l{GammaC{CQ{big, -big}}, Euler{big, RootOfUnity(12, 5)}};
  json j = l.terms();
  auto back = j.get<std::vector<AtomTerm>>();
  EXPECT_EQ(back, l.terms());
}

TEST(SweepJson, RoundTripWithCounterexamples) {
  GridSpec g = GridSpec::defaults(Field::real);
  SweepReport r = verify_generic(g, {Mutation::keep_real_dual_sign});
  ASSERT_FALSE(r.passed());
  json j = r;
  SweepReport back = json::parse(j.dump()).get<SweepReport>();
  EXPECT_EQ(back, r);
  EXPECT_EQ(j.at("verdict"), "FAIL");
  EXPECT_EQ(j.at("mutation"), "flip-real-dual");
  EXPECT_FALSE(sweep_json(r, false).contains("wall_time_s"));
}

TEST(SweepJson, PassingReport) {
  SweepReport r = verify_pat1(GridSpec::defaults(Field::nonarch));
  json j = sweep_json(r, false);
  EXPECT_EQ(j.at("verdict"), "PASS");
  EXPECT_TRUE(j.at("counterexamples").empty());
  SweepReport back = j.get<SweepReport>();
  back.wall_time_s = r.wall_time_s;
  EXPECT_EQ(back, r);
}
