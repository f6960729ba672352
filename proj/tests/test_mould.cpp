#include <gtest/gtest.h>

#include "flexionlab/mould.hpp"
#include "support.hpp"

using namespace flexionlab;
using namespace flexionlab::testing;

namespace {

// Plain functions standing in for moulds, so oracles never touch the graph.
Rat fa(const Word& w) { return w.empty() ? Rat(1) : digest_value(11, w); }
Rat fb(const Word& w) { return w.empty() ? Rat(1) : digest_value(12, w); }
Rat fc(const Word& w) { return w.empty() ? Rat(0) : digest_value(13, w); }

const Mould A = primitive("A", EmptyClass::group, fa);
const Mould B = primitive("B", EmptyClass::group, fb);
const Mould C = primitive("C", EmptyClass::lie, fc);

Word slice(const Word& w, std::size_t i, std::size_t j) { return Word(w.begin() + i, w.begin() + j); }

Rat mu_oracle(Rat (*f)(const Word&), Rat (*g)(const Word&), const Word& w) {
  Rat s;
  for (std::size_t k = 0; k <= w.size(); ++k) s += f(slice(w, 0, k)) * g(slice(w, k, w.size()));
  return s;
}

}  // namespace

TEST(Eval, UnitMould) {
  EvalContext ctx;
  EXPECT_EQ(ctx.eval(one(), {}), Rat(1));
  EXPECT_EQ(ctx.eval(one(), W({{1, 2}})), Rat(0));
  EXPECT_EQ(ctx.eval(zero(), {}), Rat(0));
}

TEST(Eval, MemoIsStable) {
  EvalContext ctx;
  const Mould m = mu(A, B);
  const Word w = W({{1, 2}, {3, 5}, {-2, 7}});
  const Rat first = ctx.eval(m, w);
  const auto hits = ctx.stats().memo_hits.load();
  EXPECT_EQ(ctx.eval(m, w), first);
  EXPECT_EQ(ctx.stats().memo_hits.load(), hits + 1);
}

TEST(Eval, EmptyClassPropagation) {
  EXPECT_EQ(mu(A, B).empty_class(), EmptyClass::group);
  EXPECT_EQ(lu(C, C).empty_class(), EmptyClass::lie);
  EXPECT_EQ(invmu(A).empty_class(), EmptyClass::group);
  EXPECT_EQ((A - one()).empty_class(), EmptyClass::lie);
  EXPECT_EQ((A + C).empty_class(), EmptyClass::group);
  EXPECT_EQ((A + B).empty_class(), EmptyClass::free);
}

TEST(Eval, EmptyClassIsAsserted) {
  EvalContext ctx;
  const Mould liar = primitive("liar", EmptyClass::group, [](const Word&) { return Rat(0); });
  EXPECT_THROW(ctx.eval(liar, {}), std::logic_error);
  EXPECT_THROW(invmu(C), std::invalid_argument);
}

TEST(Eval, DivByZeroIsLocated) {
  EvalContext ctx;
  const Mould inv = length1("inv", [](const Biletter& l) { return inverse(l.u); });
  const Word w = W({{0, 1}});
  try {
    ctx.eval(mu(inv, one()), w);
    FAIL() << "expected DivByZero";
  } catch (const DivByZero& e) {
    EXPECT_NE(e.where().find("inv"), std::string::npos);
    EXPECT_NE(e.where().find("(0;1)"), std::string::npos);
  }
}

TEST(Unary, Definitions) {
  EvalContext ctx;
  std::mt19937_64 rng(2);
  for (std::size_t r = 0; r <= 4; ++r) {
    const Word w = sample_word(rng, r);
    const Rat sign = r % 2 ? Rat(-1) : Rat(1);
    EXPECT_EQ(ctx.eval(anti(C), w), fc(reverse(w)));
    EXPECT_EQ(ctx.eval(pari(C), w), sign * fc(w));
    EXPECT_EQ(ctx.eval(neg(C), w), fc(negate(w)));
    EXPECT_EQ(ctx.eval(swap(C), w), fc(swap_pullback(w)));
    EXPECT_EQ(ctx.eval(der(C), w), Rat(static_cast<long>(r)) * fc(w));
    EXPECT_EQ(ctx.eval(leng(2, C), w), r == 2 ? fc(w) : Rat(0));
    if (r) EXPECT_EQ(ctx.eval(mantar(C), w), -sign * fc(reverse(w)));
  }
}

TEST(Unary, MantarAtLengthTwo) {
  EvalContext ctx;
  const Word w = W({{1, 2}, {3, 4}});
  EXPECT_EQ(ctx.eval(mantar(C), w), -fc(W({{3, 4}, {1, 2}})));
}

TEST(Unary, PushAtLengthOneNegates) {
  EvalContext ctx;
  std::mt19937_64 rng(9);
  for (int i = 0; i < 10; ++i) {
    const Word w = sample_word(rng, 1);
    EXPECT_EQ(ctx.eval(push(C), w), fc(negate(w)));
  }
}

TEST(Unary, PushHasOrderRPlusOne) {
  for (std::size_t r = 1; r <= 4; ++r) {
    Mould p = C;
    for (std::size_t k = 0; k <= r; ++k) p = push(p);
    EvalContext ctx;
    std::mt19937_64 rng(r);
    const Word w = sample_word(rng, r);
    EXPECT_EQ(ctx.eval(p, w), fc(w)) << "r=" << r;
  }
  EXPECT_TRUE(agree(push_inv(push(C)), C, 4));
}

TEST(Mu, SmallLengths) {
  EvalContext ctx;
  const Word x = W({{2, 3}});
  EXPECT_EQ(ctx.eval(mu(A, B), {}), Rat(1));
  EXPECT_EQ(ctx.eval(mu(A, B), x), fa({}) * fb(x) + fa(x) * fb({}));
}

TEST(Mu, MatchesCutSum) {
  EvalContext ctx;
  std::mt19937_64 rng(4);
  for (std::size_t r = 0; r <= 5; ++r) {
    const Word w = sample_word(rng, r);
    EXPECT_EQ(ctx.eval(mu(A, B), w), mu_oracle(fa, fb, w));
  }
}

TEST(Mu, Associative) {
  EvalContext ctx;
  std::mt19937_64 rng(6);
  for (int i = 0; i < 20; ++i) {
    const Word w = sample_word(rng, i % 5);
    // triple cut sum
    Rat want;
    for (std::size_t p = 0; p <= w.size(); ++p)
      for (std::size_t q = p; q <= w.size(); ++q)
        want += fa(slice(w, 0, p)) * fb(slice(w, p, q)) * fc(slice(w, q, w.size()));
    EXPECT_EQ(ctx.eval(mu(mu(A, B), C), w), want);
    EXPECT_EQ(ctx.eval(mu(A, mu(B, C)), w), want);
  }
}

TEST(InvMu, Examples) {
  EvalContext ctx;
  EXPECT_TRUE(agree(invmu(one()), one(), 3));
  const Word x = W({{3, -1}}), y = W({{5, 2}});
  EXPECT_EQ(ctx.eval(invmu(A), concat(x, y)), fa(x) * fa(y) - fa(concat(x, y)));
  EXPECT_TRUE(agree(mu(A, invmu(A)), one(), 4, 4));
  EXPECT_TRUE(agree(mu(invmu(A), A), one(), 4, 4));
}

TEST(Gantar, FixedPointCharacterisation) {
  // gantar(X) = X  iff  mantar(X) = -invmu(X), on the non-empty part
  const Mould os = polar().os;
  EXPECT_TRUE(agree(gantar(os), os, 4));
  EXPECT_FALSE(agree(gantar(A), A, 3));
}
