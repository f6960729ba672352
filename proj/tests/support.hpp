#pragma once

#include <cstdint>
#include <string>

#include <gtest/gtest.h>

#include "flexionlab/canonical.hpp"
#include "flexionlab/symmetry.hpp"

namespace flexionlab::testing {

inline const Canonical& polar() {
  static const Canonical c(unit_polar());
  return c;
}

inline Word W(std::initializer_list<std::pair<long, long>> letters) {
  Word w;
  for (auto [u, v] : letters) w.push_back({Rat(u), Rat(v)});
  return w;
}

/// Compares two moulds at `samples` random words of each length 0..max_len.
/// Words that hit a zero divisor are redrawn.
inline ::testing::AssertionResult agree(const Mould& lhs, const Mould& rhs, std::size_t max_len,
                                        std::size_t samples = 3, std::uint64_t seed = 1) {
  EvalContext ctx;
  std::mt19937_64 rng(seed);
  for (std::size_t len = 0; len <= max_len; ++len) {
    const std::size_t want = len ? samples : 1;
    std::size_t s = 0;
    for (std::size_t tries = 0; s < want && tries < 50; ++tries) {
      const Word w = sample_word(rng, len);
      try {
        const Rat a = ctx.eval(lhs, w), b = ctx.eval(rhs, w);
        if (a != b)
          return ::testing::AssertionFailure() << "at " << to_string(w) << ": " << a.str() << " vs " << b.str();
        ++s;
      } catch (const DivByZero&) {
      }
    }
    if (s < want) return ::testing::AssertionFailure() << "only " << s << " usable words at length " << len;
  }
  return ::testing::AssertionSuccess();
}

/// Brute-force shuffle check: sum over a ⧢ b of m equals target(a, b).
template <class Target>
::testing::AssertionResult shuffle_rule(const Mould& m, std::size_t max_total, Target target, std::uint64_t seed = 7) {
  EvalContext ctx;
  std::mt19937_64 rng(seed);
  std::size_t used = 0;
  for (std::size_t total = 2; total <= max_total; ++total)
    for (std::size_t k = 1; k < total; ++k)
      for (int s = 0; s < 2; ++s) {
        const Word a = sample_word(rng, k), b = sample_word(rng, total - k);
        try {
          Rat sum;
          for (const Word& w : shuffles(a, b)) sum += ctx.eval(m, w);
          const Rat want = target(ctx, a, b);
          if (sum != want)
            return ::testing::AssertionFailure()
                   << "at " << to_string(a) << " | " << to_string(b) << ": " << sum.str() << " vs " << want.str();
          ++used;
        } catch (const DivByZero&) {
        }
      }
  if (used == 0) return ::testing::AssertionFailure() << "no usable shuffle pairs";
  return ::testing::AssertionSuccess();
}

inline ::testing::AssertionResult alternal(const Mould& m, std::size_t max_total) {
  return shuffle_rule(m, max_total, [](EvalContext&, const Word&, const Word&) { return Rat(0); });
}

inline ::testing::AssertionResult symmetral(const Mould& m, std::size_t max_total) {
  return shuffle_rule(m, max_total,
                      [&m](EvalContext& ctx, const Word& a, const Word& b) { return ctx.eval(m, a) * ctx.eval(m, b); });
}

}  // namespace flexionlab::testing
