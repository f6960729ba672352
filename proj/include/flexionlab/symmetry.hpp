#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "flexionlab/canonical.hpp"

namespace flexionlab {

// ---------------------------------------------------------------------------
// Random bimoulds. A "generic" mould is a seeded digest of the exact word, so
// it carries no structure at all and never produces a pole.

inline Rat digest_value(std::uint64_t seed, const Word& w, const Bounds& b = {}) {
  std::mt19937_64 rng(mix64(seed ^ hash_name(to_string(w))));
  return sample_rat(rng, b);
}

inline Mould generic_mould(std::uint64_t seed, EmptyClass cls = EmptyClass::lie) {
  return primitive("generic#" + std::to_string(seed), cls, [seed, cls](const Word& w) {
    if (w.empty()) return cls == EmptyClass::group ? Rat(1) : Rat(0);
    return digest_value(seed, w);
  });
}

/// Generic values on length 1 only.
inline Mould generic_length1(std::uint64_t seed) {
  return primitive("generic1#" + std::to_string(seed), EmptyClass::lie, [seed](const Word& w) {
    return w.size() == 1 ? digest_value(seed, w) : Rat(0);
  });
}

/// f(u;v) + f(-u;-v) on length 1.
inline Mould even_length1(std::uint64_t seed) {
  return primitive("even1#" + std::to_string(seed), EmptyClass::lie, [seed](const Word& w) {
    return w.size() == 1 ? digest_value(seed, w) + digest_value(seed, negate(w)) : Rat(0);
  });
}

enum class ProfileKind { generic, even_length1, alternal, symmetral, push_invariant, al_al_seed, al_ol };

inline const char* to_string(ProfileKind k) {
  switch (k) {
    case ProfileKind::generic: return "generic";
    case ProfileKind::even_length1: return "even_length1";
    case ProfileKind::alternal: return "alternal";
    case ProfileKind::symmetral: return "symmetral";
    case ProfileKind::push_invariant: return "push_invariant";
    case ProfileKind::al_al_seed: return "al_al_seed";
    case ProfileKind::al_ol: return "al_ol";
  }
  return "?";
}

struct Profile {
  ProfileKind kind = ProfileKind::generic;
  std::uint64_t seed = 0;
  int depth = 3;  // bracket depth of the nested ari chain
};

/// Push has order r+1 on length r, so averaging push^k over k = 0..r projects
/// each length component onto the push-invariants.
class PushSymNode final : public Node {
 public:
  static constexpr std::size_t kMaxLength = 16;

  explicit PushSymNode(const Mould& a) : Node("pushsym(" + ref(a) + ")", a.empty_class()) {
    powers_[0] = a;
    for (std::size_t k = 1; k <= kMaxLength; ++k) powers_[k] = push(powers_[k - 1]);
  }

  Rat compute(EvalContext& ctx, const Word& w) const override {
    const std::size_t r = w.size();
    if (r > kMaxLength) throw std::length_error("pushsym supports words up to length 16");
    Rat s;
    for (std::size_t k = 0; k <= r; ++k) s += ctx.eval(powers_[k], w);
    return s / Rat(static_cast<long>(r + 1));
  }

 private:
  std::array<Mould, kMaxLength + 1> powers_;
};

inline Mould pushsym(const Mould& a) { return make_mould<PushSymNode>(a); }

/// g_1 + ... + g_n + ari(g_1,g_2) + ari(g_3, ari(g_1,g_2)) + ... down to the given depth.
inline Mould bracket_chain(const std::vector<Mould>& g, int depth) {
  Mould out = g.front();
  for (std::size_t i = 1; i < g.size(); ++i) out = out + g[i];
  if (g.size() < 2 || depth < 1) return out;
  Mould chain = ari(g[0], g[1]);
  out = out + chain;
  for (int d = 2; d <= depth; ++d) {
    chain = ari(g[(d) % g.size()], chain);
    out = out + chain;
  }
  return out;
}

inline Mould gen_bimould(const Profile& p, const Canonical* c = nullptr) {
  const std::uint64_t s = mix64(p.seed ^ hash_name(to_string(p.kind)));
  auto seeds = [&](std::size_t n) {
    std::vector<std::uint64_t> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = mix64(s + i + 1);
    return out;
  };
  switch (p.kind) {
    case ProfileKind::generic:
      return generic_mould(s);
    case ProfileKind::even_length1:
      return even_length1(s);
    case ProfileKind::alternal: {
      std::vector<Mould> g;
      const auto sd = seeds(4);
      g.push_back(generic_length1(sd[0]));
      g.push_back(even_length1(sd[1]));
      g.push_back(generic_length1(sd[2]));
      g.push_back(generic_length1(sd[3]));
      return bracket_chain(g, p.depth);
    }
    case ProfileKind::symmetral:
      return expari(gen_bimould({ProfileKind::alternal, p.seed, p.depth}));
    case ProfileKind::push_invariant:
      return pushsym(generic_mould(s));
    case ProfileKind::al_al_seed: {
      std::vector<Mould> g;
      for (auto x : seeds(4)) g.push_back(even_length1(x));
      return bracket_chain(g, p.depth);
    }
    case ProfileKind::al_ol:
      if (!c) throw std::invalid_argument("al_ol profile needs a flexion unit");
      return adari(c->ess, gen_bimould({ProfileKind::al_al_seed, p.seed, p.depth}));
  }
  throw std::invalid_argument("unknown profile");
}

// ---------------------------------------------------------------------------
// Pointwise symmetry defects. Each returns (lhs, rhs) for a pair of words.

inline Rat shuffle_sum(EvalContext& ctx, const Mould& m, const Word& a, const Word& b) {
  Rat s;
  for_each_shuffle(a, b, [&](const Word& w) { s += ctx.eval(m, w); });
  return s;
}

inline std::pair<Rat, Rat> alternal_probe(EvalContext& ctx, const Mould& m, const Word& a, const Word& b) {
  return {shuffle_sum(ctx, m, a, b), Rat(0)};
}

inline std::pair<Rat, Rat> symmetral_probe(EvalContext& ctx, const Mould& m, const Word& a, const Word& b) {
  return {shuffle_sum(ctx, m, a, b), ctx.eval(m, a) * ctx.eval(m, b)};
}

/// Moulds whose alternality is O-alternality of the argument: one per route.
inline Mould o_alternal_ganit_route(const Canonical& c, const Mould& a) { return ganit_inv(c.oz, a); }
inline Mould o_alternal_gamit_route(const Canonical& c, const Mould& a) { return gamit_inv(c.oz, a); }

/// D with der(S) = preari(S, D), read off a group-class S length by length.
inline Mould extract_dilator(const Mould& s) {
  require_group(s, "extract_dilator");
  const Mould ds = der(s);
  return recursive("dilator(" + ref(s) + ")", EmptyClass::lie, Rat(0), [s, ds](const Mould& trial, std::size_t) {
    // preari(S, D) = D + (terms reading D below the current length)
    return ds - (preari(s, trial) - trial);
  });
}

/// Right side of the four-sum expansion of arit(B)(A) on a shuffle a ⧢ b.
inline Rat arit_shuffle_four_sum(EvalContext& ctx, const Mould& b_mould, const Mould& a_mould, const Word& a,
                                 const Word& b) {
  auto side = [&](const Word& x, bool left) {
    const WordView v(x);
    const std::size_t n = x.size();
    Rat total;
    for (std::size_t i = 0; i <= n; ++i) {
      for (std::size_t j = i; j <= n; ++j) {
        const auto x1 = v.first(i), x2 = v.subspan(i, j - i), x3 = v.subspan(j);
        auto pair_with = [&](const Word& y) { return left ? shuffle_sum(ctx, a_mould, y, b) : shuffle_sum(ctx, a_mould, a, y); };
        if (!x2.empty() && !x3.empty()) {
          Rat d = ctx.eval(b_mould, flr(x2, x3));
          if (!d.is_zero()) total += pair_with(concat(x1, ful(x2, x3))) * d;
        }
        if (!x1.empty() && !x2.empty()) {
          Rat d = ctx.eval(b_mould, fll(x1, x2));
          if (!d.is_zero()) total -= pair_with(concat(fur(x1, x2), x3)) * d;
        }
      }
    }
    return total;
  };
  return side(a, true) + side(b, false);
}

/// Right side of the expansion of gaxit(A,B)(O) on a shuffle a ⧢ b, for symmetral A and B.
/// ab must be mu(A,B).
inline Rat gaxit_o_shuffle_sum(EvalContext& ctx, const Mould& a_mould, const Mould& b_mould, const Mould& ab,
                               const Mould& o, const Word& a, const Word& b) {
  const Rat total_u = sum_u(a) + sum_u(b);
  Rat total;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const WordView v(a);
    const auto x = v.subspan(i, 1);
    total += ctx.eval(a_mould, flr(v.first(i), x)) * ctx.eval(o, Word{{total_u, a[i].v}}) *
             ctx.eval(b_mould, fll(x, v.subspan(i + 1))) * ctx.eval(ab, fll(x, b));
  }
  for (std::size_t i = 0; i < b.size(); ++i) {
    const WordView v(b);
    const auto y = v.subspan(i, 1);
    total += ctx.eval(a_mould, flr(v.first(i), y)) * ctx.eval(o, Word{{total_u, b[i].v}}) *
             ctx.eval(b_mould, fll(y, v.subspan(i + 1))) * ctx.eval(ab, flr(a, y));
  }
  return total;
}

}  // namespace flexionlab
