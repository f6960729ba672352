#include <gtest/gtest.h>

#include "flexionlab/flexion.hpp"
#include "support.hpp"

using namespace flexionlab;
using namespace flexionlab::testing;

namespace {

Rat fa(const Word& w) { return w.empty() ? Rat(0) : digest_value(21, w); }
Rat fx(const Word& w) { return w.empty() ? Rat(0) : digest_value(22, w); }

const Mould A = primitive("A", EmptyClass::lie, fa);
const Mould X = primitive("X", EmptyClass::lie, fx);
const Mould B = generic_mould(23);
const Mould Cm = generic_mould(24);
const Mould G = generic_mould(25, EmptyClass::group);
const Mould H = generic_mould(26, EmptyClass::group);

}  // namespace

TEST(Amit, ShortWords) {
  EvalContext ctx;
  EXPECT_EQ(ctx.eval(amit(X, A), W({{1, 2}})), Rat(0));
  EXPECT_EQ(ctx.eval(arit(X, A), W({{1, 2}})), Rat(0));
  EXPECT_EQ(ctx.eval(arit(X, A), {}), Rat(0));
  const Word w1 = W({{3, 5}}), w2 = W({{-2, 7}});
  EXPECT_EQ(ctx.eval(amit(X, A), concat(w1, w2)), fa(ful(w1, w2)) * fx(flr(w1, w2)));
  EXPECT_EQ(ctx.eval(anit(X, A), concat(w1, w2)), fa(fur(w1, w2)) * fx(fll(w1, w2)));
}

TEST(Ari, Basics) {
  EXPECT_TRUE(agree(ari(A, A), zero(), 4));
  EXPECT_TRUE(agree(leng(1, ari(A, B)), zero(), 2));
  const Mould jacobi = ari(A, ari(B, Cm)) + ari(B, ari(Cm, A)) + ari(Cm, ari(A, B));
  EXPECT_TRUE(agree(jacobi, zero(), 4));
  EXPECT_FALSE(agree(ari(A, B), zero(), 2));
}

TEST(Gaxit, UnitArgumentIsFixed) {
  EXPECT_TRUE(agree(gaxit(G, H, one()), one(), 4));
}

TEST(Gaxit, LinearisesToAmitAndAnit) {
  // f(t) = gaxit(1 + tX, 1)(A) is a polynomial of degree <= 2 up to length 4;
  // the linear coefficient from f(0), f(1), f(2) is 2(f1 - f0) - (f2 - f0)/2.
  auto scaled = [](int t) { return lincomb({{1, one()}, {t, X}}); };
  const Mould f1 = gamit(scaled(1), A) - A, f2 = gamit(scaled(2), A) - A;
  EXPECT_TRUE(agree(lincomb({{2, f1}, {Rat(-1, 2), f2}}), amit(X, A), 4));
  const Mould g1 = ganit(scaled(1), A) - A, g2 = ganit(scaled(2), A) - A;
  EXPECT_TRUE(agree(lincomb({{2, g1}, {Rat(-1, 2), g2}}), anit(X, A), 4));
}

TEST(Axit, IsAMuDerivation) {
  EXPECT_TRUE(agree(axit(A, X, mu(B, Cm)), mu(axit(A, X, B), Cm) + mu(B, axit(A, X, Cm)), 4));
}

TEST(Irat, MantarIntertwining) {
  EXPECT_TRUE(agree(irat(mantar(X), mantar(A)), mantar(irat(push_inv(X), A)), 4));
}

TEST(Gari, Basics) {
  EvalContext ctx;
  std::mt19937_64 rng(1);
  for (int i = 0; i < 5; ++i) {
    const Word w = sample_word(rng, 1);
    EXPECT_EQ(ctx.eval(gari(G, H), w), ctx.eval(G, w) + ctx.eval(H, w));
  }
  EXPECT_TRUE(agree(gari(G, invgari(G)), one(), 4));
  EXPECT_TRUE(agree(gari(gari(G, H), G), gari(G, gari(H, G)), 3));
}

TEST(ExpLog, InversePair) {
  EXPECT_TRUE(agree(expari(zero()), one(), 3));
  EXPECT_TRUE(agree(logari(one()), zero(), 3));
  EXPECT_TRUE(agree(logari(expari(A)), A, 4));
}

TEST(Adari, ClosedFormAndSeries) {
  EXPECT_TRUE(agree(adari(one(), A), A, 4));
  EXPECT_TRUE(agree(adari(G, A), adari_series(G, A), 4));
  EXPECT_TRUE(agree(leng(1, adari(polar().ess, A)), leng(1, A), 2));
}

TEST(Swamu, LengthTwoCuts) {
  EvalContext ctx;
  const Word w = W({{2, 3}, {5, -7}});
  const Biletter l1 = w[0], l2 = w[1];
  const Rat want = ctx.eval(G, {}) * ctx.eval(H, w) +
                   ctx.eval(G, {{l1.u + l2.u, l2.v}}) * ctx.eval(H, {{l1.u, l1.v - l2.v}}) +
                   ctx.eval(G, w) * ctx.eval(H, {});
  EXPECT_EQ(ctx.eval(swamu(G, H), w), want);
  EXPECT_EQ(ctx.eval(swamu(G, H), {}), Rat(1));
}

TEST(Swamu, Conjugations) {
  EXPECT_TRUE(agree(swamu(G, H), swap(mu(swap(G), swap(H))), 4));
  EXPECT_TRUE(agree(push(swamu(G, H)), answamu(push(H), push(G)), 4));
  const Mould& es = polar().es;
  EXPECT_TRUE(agree(preari(es, A), swamu(es, mu(es, A) - answamu(es - one(), A)), 4));
}

TEST(Swap, ConjugatedOperations) {
  EXPECT_TRUE(agree(swap(preira(swap(A), swap(B))), preari(A, B), 4));
  const Mould& oz = polar().oz;
  EXPECT_TRUE(agree(girat(oz, A), gaxit(oz, oz, A), 4));
  EXPECT_TRUE(agree(girat_inv(oz, oz), one() + polar().O, 4));
}
