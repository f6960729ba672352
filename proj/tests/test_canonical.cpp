#include <gtest/gtest.h>

#include "flexionlab/canonical.hpp"
#include "support.hpp"

using namespace flexionlab;
using namespace flexionlab::testing;

TEST(Units, TripartiteExamples) {
  // polar E = 1/u at (u1,u2) = (2,3)
  EXPECT_EQ(Rat(1, 6), Rat(1, 15) + Rat(1, 10));
  const FlexionUnit p = unit_polar();
  EXPECT_TRUE(tripartite_defect(p.E, {Rat(2), Rat(0)}, {Rat(3), Rat(0)}).is_zero());
  EXPECT_EQ(p.E({Rat(2), Rat(0)}) * p.E({Rat(3), Rat(0)}), Rat(1, 6));
  // conjugate at (v1,v2) = (1,3): 1/3 = 1/2 - 1/6
  const FlexionUnit q = unit_conjugate(p);
  EXPECT_EQ(q.E({Rat(0), Rat(1)}) * q.E({Rat(0), Rat(3)}), Rat(1, 3));
  EXPECT_TRUE(tripartite_defect(q.E, {Rat(7), Rat(1)}, {Rat(-2), Rat(3)}).is_zero());
}

TEST(Units, RegistryRejectsNonUnits) {
  auto& reg = UnitRegistry::instance();
  EXPECT_THROW(reg.add({"constant", [](const Biletter&) { return Rat(1); }, [](const Biletter&) { return Rat(1); }}),
               std::invalid_argument);
  EXPECT_THROW(reg.get("constant"), std::out_of_range);
  EXPECT_EQ(reg.get("polar").name, "polar");
  EXPECT_EQ(reg.get("polar-conjugate").name, "polar-conjugate");
}

TEST(Units, ConjugateIsAnInvolution) {
  const FlexionUnit p = unit_polar();
  const FlexionUnit pp = unit_conjugate(unit_conjugate(p));
  EXPECT_EQ(pp.name, p.name);
  std::mt19937_64 rng(8);
  for (int i = 0; i < 10; ++i) {
    const Biletter l = sample_letter(rng);
    EXPECT_EQ(pp.E(l), p.E(l));
    EXPECT_EQ(pp.O(l), p.O(l));
    EXPECT_EQ(p.O(l), p.E({l.v, l.u}));
  }
}

TEST(Canonical, ProductMoulds) {
  const Canonical& c = polar();
  EvalContext ctx;
  EXPECT_EQ(ctx.eval(c.oz, {}), Rat(1));
  std::mt19937_64 rng(2);
  for (std::size_t r = 1; r <= 4; ++r) {
    const Word w = sample_word(rng, r);
    Rat prod(1);
    for (const auto& l : w) prod *= inverse(l.v);
    EXPECT_EQ(ctx.eval(c.oz, w), prod);
  }
  EXPECT_EQ(ctx.eval(c.es, W({{2, 3}})), Rat(1, 2));
  const Word w = W({{3, 5}, {4, -1}});
  EXPECT_EQ(ctx.eval(c.es, w), Rat(1, 3 * 7));
  EXPECT_TRUE(agree(pari(c.oz), invmu(one() + c.O), 4));
  EXPECT_TRUE(agree(c.es, swap(c.oz), 4));
  EXPECT_TRUE(agree(c.os, swap(c.ez), 4));
}

TEST(Canonical, PushOfEs) {
  EXPECT_TRUE(agree(invmu(polar().es), push(polar().es), 4));
}

TEST(Canonical, DisplayedOsAndGanit) {
  const Canonical& c = polar();
  const Mould osd = mould_os_display(c.unit());
  EXPECT_TRUE(agree(ganit(osd, c.O), osd - one(), 4));
  EXPECT_TRUE(agree(gamit(c.os, c.O), c.os - one(), 4));
}

TEST(Canonical, DilatorSeries) {
  const Canonical& c = polar();
  EvalContext ctx;
  std::mt19937_64 rng(4);
  for (int i = 0; i < 5; ++i) {
    const Word w = sample_word(rng, 1);
    const Rat o = c.unit().O(w[0]);
    EXPECT_EQ(ctx.eval(c.ro(1), w), o);
    EXPECT_EQ(ctx.eval(c.To, w), o / Rat(2));
    EXPECT_EQ(ctx.eval(c.S, w), ctx.eval(c.D, w));
  }
  EXPECT_TRUE(agree(der(c.S), preari(c.S, c.D), 4));
  EXPECT_TRUE(agree(ganit_inv(c.oz, c.To), c.D, 4));
}

TEST(Canonical, BisymmetralPair) {
  const Canonical& c = polar();
  EvalContext ctx;
  EXPECT_EQ(ctx.eval(c.ess, {}), Rat(1));
  EXPECT_EQ(ctx.eval(c.oess, {}), Rat(1));
  EXPECT_TRUE(symmetral(c.ess, 4));
  EXPECT_TRUE(symmetral(c.oess, 4));
  EXPECT_TRUE(symmetral(c.eess(), 3));
  EXPECT_TRUE(symmetral(c.oss(), 3));
}

TEST(Canonical, ReconstructionGuard) {
  const Canonical& c = polar();
  EXPECT_TRUE(agree(fragari(neg(c.ess), c.ess), c.es, 3));
}
