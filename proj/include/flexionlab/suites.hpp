#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "flexionlab/check.hpp"
#include "flexionlab/negelon.hpp"
#include "flexionlab/senary.hpp"
#include "flexionlab/symmetry.hpp"

namespace flexionlab {

struct Suite {
  std::string name;
  std::string anchor;
  std::string description;
  std::function<std::vector<Check>(const Canonical&, const SamplePlan&)> build;
};

// ---------------------------------------------------------------------------
// Shared check shapes.

inline Check alternal_check(std::string name, Mould m, std::size_t max_length = kPlanLength) {
  return on_pairs(std::move(name), [m = std::move(m)](EvalContext& ctx, const Word& a, const Word& b) {
    return alternal_probe(ctx, m, a, b);
  }, max_length);
}

inline Check symmetral_check(std::string name, Mould m, std::size_t max_length = kPlanLength) {
  return on_pairs(std::move(name), [m = std::move(m)](EvalContext& ctx, const Word& a, const Word& b) {
    return symmetral_probe(ctx, m, a, b);
  }, max_length);
}

/// O-alternality through both inverse routes.
inline std::vector<Check> o_alternal_checks(const Canonical& c, const std::string& name, const Mould& m) {
  return {alternal_check(name + " is O-alternal (ganit route)", o_alternal_ganit_route(c, m)),
          alternal_check(name + " is O-alternal (gamit route)", o_alternal_gamit_route(c, m))};
}

/// Membership in the twisted or untwisted dimorphic space: alternal, even at
/// length 1, swappee alternal (untwisted) or O-alternal (twisted).
inline std::vector<Check> dimorphy_checks(const Canonical& c, const std::string& name, const Mould& m, bool twisted) {
  std::vector<Check> out;
  out.push_back(alternal_check(name + " is alternal", m));
  out.push_back(equal(name + " is even at length 1", leng(1, m), neg(leng(1, m)), 1));
  if (twisted) {
    for (auto& k : o_alternal_checks(c, "swap of " + name, swap(m))) out.push_back(std::move(k));
  } else {
    out.push_back(alternal_check("swap of " + name + " is alternal", swap(m)));
  }
  return out;
}

inline void append(std::vector<Check>& to, std::vector<Check> more) {
  for (auto& k : more) to.push_back(std::move(k));
}

/// Deterministic per-plan test subjects.
struct Subjects {
  const Canonical& c;
  std::uint64_t seed;

  Mould generic(std::uint64_t k, EmptyClass cls = EmptyClass::lie) const {
    return generic_mould(mix64(seed * 0x2545f4914f6cdd1dULL + k), cls);
  }
  Mould profile(ProfileKind kind, std::uint64_t k, int depth = 3) const {
    return gen_bimould({kind, mix64(seed + 0x9e37 * k), depth}, &c);
  }
};

// ---------------------------------------------------------------------------
// Suites.

inline std::vector<Check> suite_unit_axioms(const Canonical& c, const SamplePlan& plan) {
  std::vector<Check> out;
  auto tripartite = [](std::string name, std::function<Rat(const Biletter&)> e) {
    Check k;
    k.name = std::move(name);
    k.min_length = k.max_length = 2;
    k.at_word = [e = std::move(e)](EvalContext&, const Word& w) {
      const Rat s = w[0].u + w[1].u;
      return Values{e(w[0]) * e(w[1]),
                    e({s, w[0].v}) * e({w[1].u, w[1].v - w[0].v}) + e({s, w[1].v}) * e({w[0].u, w[0].v - w[1].v})};
    };
    return k;
  };
  const FlexionUnit& u = c.unit();
  out.push_back(tripartite("tripartite relation for E", u.E));
  out.push_back(tripartite("tripartite relation for O", u.O));
  out.push_back(expect_failure(tripartite("tripartite relation for 1/(u+v) (not a unit)",
                                          [](const Biletter& l) { return inverse(l.u + l.v); })));
  const FlexionUnit twice = unit_conjugate(unit_conjugate(u));
  out.push_back(equal("conjugating twice restores E", unit_E(twice), c.E, 1));
  out.push_back(equal("conjugating twice restores O", unit_O(twice), c.O, 1));

  auto product = [](std::string label, std::function<Rat(const Biletter&)> f) {
    return primitive(std::move(label), EmptyClass::group, [f = std::move(f)](const Word& w) {
      Rat p(1);
      for (const auto& l : w) p *= f(l);
      return p;
    });
  };
  out.push_back(equal("oz is the letterwise product of O", c.oz, product("prod O", u.O)));
  out.push_back(equal("ez is the letterwise product of E", c.ez, product("prod E", u.E)));
  out.push_back(equal("pari(oz) = invmu(1+O)", pari(c.oz), invmu(one() + c.O)));
  out.push_back(equal("es closed product form", c.es,
                      primitive("es product", EmptyClass::group, [e = u.E](const Word& w) {
                        Rat p(1), us;
                        for (std::size_t i = 0; i < w.size(); ++i) {
                          us += w[i].u;
                          p *= e({us, i + 1 < w.size() ? w[i].v - w[i + 1].v : w[i].v});
                        }
                        return p;
                      })));
  out.push_back(equal("swap(oz) = es", swap(c.oz), c.es));
  out.push_back(equal("swap(es) = oz", swap(c.es), c.oz));
  out.push_back(equal("os = swap(ez)", c.os, swap(c.ez)));
  out.push_back(equal("os is gantar-invariant", gantar(c.os), c.os));
  (void)plan;
  return out;
}

inline std::vector<Check> suite_algebra_core(const Canonical& c, const SamplePlan& plan) {
  const Subjects s{c, plan.seed};
  const Mould A = s.generic(1), B = s.generic(2), C = s.generic(3);
  const Mould F = s.generic(4, EmptyClass::free), G = s.generic(5, EmptyClass::free);
  const Mould P = s.generic(6, EmptyClass::group), Q = s.generic(7, EmptyClass::group), R = s.generic(8, EmptyClass::group);
  const Mould S1 = s.profile(ProfileKind::symmetral, 1), S2 = s.profile(ProfileKind::symmetral, 2);
  const Mould Al = s.profile(ProfileKind::alternal, 1);
  std::vector<Check> out;

  out.push_back(equal("mu is associative", mu(mu(F, G), A), mu(F, mu(G, A))));
  out.push_back(equal("mu(P, invmu(P)) = 1", mu(P, invmu(P)), one()));
  {
    Check k;
    k.name = "invmu at length 2";
    k.min_length = k.max_length = 2;
    k.at_word = [P, iP = invmu(P)](EvalContext& ctx, const Word& w) {
      return Values{ctx.eval(iP, w), ctx.eval(P, Word{w[0]}) * ctx.eval(P, Word{w[1]}) - ctx.eval(P, w)};
    };
    out.push_back(std::move(k));
  }
  out.push_back(expect_failure(equal("mu is commutative (must fail)", mu(A, B), mu(B, A))));

  out.push_back(equal("push after push_inv is the identity", push(push_inv(F)), F));
  {
    std::vector<Mould> powers{F};
    for (int k = 1; k <= 16; ++k) powers.push_back(push(powers.back()));
    Check k;
    k.name = "push has order r+1 at length r";
    k.at_word = [powers](EvalContext& ctx, const Word& w) {
      return Values{ctx.eval(powers.at(w.size() + 1), w), ctx.eval(powers[0], w)};
    };
    out.push_back(std::move(k));
  }
  {
    Check k = lengths(equal("push at length 1 negates the letter", push(F), neg(F)), 1, 1);
    out.push_back(std::move(k));
  }
  out.push_back(equal("mantar is an involution", mantar(mantar(F)), F));
  out.push_back(equal("anti o mantar = -pari", anti(mantar(F)), -pari(F)));
  out.push_back(lengths(equal("mantar at length 2", mantar(F), -anti(F)), 2, 2));
  out.push_back(equal("der o leng_2 = 2 leng_2", der(leng(2, F)), Rat(2) * leng(2, F)));
  out.push_back(equal("alternal moulds are mantar-invariant", mantar(Al), Al));
  out.push_back(equal("symmetral moulds are gantar-invariant", gantar(S1), S1));
  out.push_back(equal("pari distributes over mu", pari(mu(F, G)), mu(pari(F), pari(G))));
  out.push_back(equal("pari distributes over invmu", pari(invmu(P)), invmu(pari(P))));
  out.push_back(equal("pari distributes over preari", pari(preari(A, B)), preari(pari(A), pari(B))));

  // Linear parts of gamit(1+tX) and ganit(1+tX) from t = 1, 2 (exact up to length 3).
  auto linear_part = [](const Mould& g1, const Mould& g2, const Mould& a) {
    return Rat(2) * (g1 - a) - Rat(1, 2) * (g2 - a);
  };
  out.push_back(equal("gamit linearizes to amit",
                      linear_part(gamit(one() + A, C), gamit(one() + Rat(2) * A, C), C), amit(A, C), 3));
  out.push_back(equal("ganit linearizes to anit",
                      linear_part(ganit(one() + A, C), ganit(one() + Rat(2) * A, C), C), anit(A, C), 3));
  out.push_back(equal("axit(A,B) is a mu-derivation", axit(A, B, mu(F, P)), mu(axit(A, B, F), P) + mu(F, axit(A, B, P))));

  out.push_back(vanishes("ari(A,A) = 0", ari(A, A)));
  out.push_back(lengths(vanishes("ari vanishes at length 1", ari(A, B)), 1, 1));
  out.push_back(vanishes("ari satisfies Jacobi", ari(A, ari(B, C)) + ari(B, ari(C, A)) + ari(C, ari(A, B))));

  out.push_back(equal("gari is associative", gari(gari(P, Q), R), gari(P, gari(Q, R))));
  out.push_back(equal("gari(P, invgari(P)) = 1", gari(P, invgari(P)), one()));
  out.push_back(lengths(equal("gari adds at length 1", gari(P, Q), P + Q - one()), 1, 1));
  out.push_back(symmetral_check("gari of symmetrals is symmetral", gari(S1, S2)));
  out.push_back(symmetral_check("invgari of a symmetral is symmetral", invgari(S1)));
  out.push_back(equal("logari o expari = id", logari(expari(A)), A));
  {
    const Mould a1 = generic_length1(mix64(plan.seed + 9));
    out.push_back(equal("der(expari(A)) = preari(expari(A), A) for A of length 1", der(expari(a1)), preari(expari(a1), a1)));
  }

  out.push_back(equal("adari closed form = nested ari series", adari(S1, A), adari_series(S1, A)));
  out.push_back(equal("adari(1) = id", adari(one(), A), A));
  out.push_back(equal("adari(gari(M,N)) = adari(M) o adari(N)", adari(gari(P, Q), A), adari(P, adari(Q, A))));
  out.push_back(equal("adari(M) is an ari-automorphism", adari(P, ari(A, B)), ari(adari(P, A), adari(P, B))));

  out.push_back(equal("gaxit(X,Y) = gamit(X) o ganit(gamit(X)^-1(Y))", gaxit(P, Q, F),
                      gamit(P, ganit(gamit_inv(P, Q), F)), 3));
  out.push_back(equal("gaxit(X,Y) = ganit(Y) o gamit(ganit(Y)^-1(X))", gaxit(P, Q, F),
                      ganit(Q, gamit(ganit_inv(Q, P), F)), 3));
  out.push_back(equal("gaxit(X,Y)(1) = 1", gaxit(P, Q, one()), one()));
  out.push_back(equal("ganit(oz) o ganit(pari(anti(os))) = id", ganit(c.oz, ganit(pari(anti(c.os)), F)), F));
  out.push_back(equal("gamit(os) o gamit(pari(oz)) = id", gamit(c.os, gamit(pari(c.oz), F)), F));
  out.push_back(equal("girat(oz) = gaxit(oz,oz)", girat(c.oz, F), gaxit(c.oz, c.oz, F)));
  out.push_back(equal("girat(oz)^-1(oz) = 1+O", girat_inv(c.oz, c.oz), one() + c.O));
  out.push_back(equal("swap o preira o (swap,swap) = preari", swap(preira(swap(A), swap(B))), preari(A, B)));
  out.push_back(equal("irat(X) = axit(X, -push(X))", irat(A, F), axit(A, -push(A), F)));
  return out;
}

inline std::vector<Check> suite_swamu(const Canonical& c, const SamplePlan& plan) {
  const Subjects s{c, plan.seed};
  const Mould F = s.generic(11, EmptyClass::free), G = s.generic(12, EmptyClass::free);
  const Mould B = s.generic(13);
  std::vector<Check> out;
  out.push_back(equal("swamu = swap o mu o (swap, swap)", swamu(F, G), swap(mu(swap(F), swap(G)))));
  out.push_back(equal("answamu = (anti o swap) o mu o (swap o anti, swap o anti)", answamu(F, G),
                      anti(swap(mu(swap(anti(F)), swap(anti(G)))))));
  {
    Check k = lengths(equal("swamu at length 2", swamu(F, G), swamu(F, G)), 2, 2);
    k.at_word = [F, G, sw = swamu(F, G)](EvalContext& ctx, const Word& w) {
      const Rat rhs = ctx.eval(F, Word{}) * ctx.eval(G, w) +
                      ctx.eval(F, Word{{w[0].u + w[1].u, w[1].v}}) * ctx.eval(G, Word{{w[0].u, w[0].v - w[1].v}}) +
                      ctx.eval(F, w) * ctx.eval(G, Word{});
      return Values{ctx.eval(sw, w), rhs};
    };
    out.push_back(std::move(k));
  }
  out.push_back(equal("push(swamu(A,B)) = answamu(push(B), push(A))", push(swamu(F, G)),
                      answamu(push(G), push(F))));
  out.push_back(equal("preari(es,B) = swamu(es, mu(es,B) - answamu(es-1,B))", preari(c.es, B),
                      swamu(c.es, mu(c.es, B) - answamu(c.es - one(), B))));
  out.push_back(equal("pari distributes over swamu", pari(swamu(F, G)), swamu(pari(F), pari(G))));
  out.push_back(equal("pari distributes over answamu", pari(answamu(F, G)), answamu(pari(F), pari(G))));
  out.push_back(expect_failure(equal("swamu is commutative (must fail)", swamu(F, G), swamu(G, F))));
  return out;
}

inline std::vector<Check> suite_symmetry(const Canonical& c, const SamplePlan& plan) {
  const Subjects s{c, plan.seed};
  std::vector<Check> out;
  const Mould gen = s.generic(21);
  const Mould ev = s.profile(ProfileKind::even_length1, 1);
  out.push_back(lengths(equal("even_length1 is even", ev, neg(ev)), 1, 1));
  out.push_back(alternal_check("alternal profile is alternal", s.profile(ProfileKind::alternal, 1)));
  out.push_back(symmetral_check("symmetral profile is symmetral", s.profile(ProfileKind::symmetral, 1)));
  out.push_back(symmetral_check("es is symmetral", c.es));
  out.push_back(symmetral_check("os is symmetral", c.os));

  const Mould ps = pushsym(gen);
  out.push_back(equal("pushsym output is push-invariant", push(ps), ps));
  out.push_back(equal("pushsym is idempotent", pushsym(ps), ps));
  {
    Check k = lengths(equal("pushsym at length 1 averages A(w) and A(-w)", ps, Rat(1, 2) * (gen + neg(gen))), 1, 1);
    out.push_back(std::move(k));
  }

  const Mould alal1 = s.profile(ProfileKind::al_al_seed, 1), alal2 = s.profile(ProfileKind::al_al_seed, 2);
  append(out, dimorphy_checks(c, "al_al_seed", alal1, false));
  out.push_back(equal("al_al_seed is neg-invariant", neg(alal1), alal1));
  out.push_back(equal("al_al_seed is push-invariant", push(alal1), alal1));
  append(out, dimorphy_checks(c, "ari of two al_al_seeds", ari(alal1, alal2), false));
  append(out, dimorphy_checks(c, "al_ol profile", s.profile(ProfileKind::al_ol, 1), true));

  out.push_back(expect_failure(equal("generic is push-invariant (must fail)", push(gen), gen)));
  out.push_back(expect_failure(alternal_check("generic is alternal (must fail)", gen)));
  out.push_back(expect_failure(symmetral_check("generic group mould is symmetral (must fail)",
                                               s.generic(22, EmptyClass::group))));
  for (auto& k : o_alternal_checks(c, "generic (must fail)", gen)) out.push_back(expect_failure(std::move(k)));
  return out;
}

inline std::vector<Check> suite_mould_constants(const Canonical& c, const SamplePlan& plan) {
  const Subjects s{c, plan.seed};
  const Mould B = s.generic(31);
  std::vector<Check> out;
  out.push_back(lengths(equal("es at length 1 is E", c.es, c.E), 1, 1));
  out.push_back(lengths(equal("ro_1 is O", c.ro(1), c.O), 1, 1));
  out.push_back(lengths(equal("To at length 1 is O/2", c.To, Rat(1, 2) * c.O), 1, 1));
  {
    std::vector<Mould> ro{zero()};
    for (std::size_t r = 1; r <= 16; ++r) ro.push_back(c.ro(r));
    Check k;
    k.name = "To = sum of ro_r / (r(r+1))";
    k.min_length = 1;
    k.at_word = [ro, to = c.To](EvalContext& ctx, const Word& w) {
      const long r = static_cast<long>(w.size());
      return Values{ctx.eval(to, w), Rat(1, r * (r + 1)) * ctx.eval(ro.at(w.size()), w)};
    };
    out.push_back(std::move(k));
  }
  if (c.unit().name == "polar") {
    // the displayed product only agrees when O ignores u
    const Mould osd = mould_os_display(c.unit());
    out.push_back(equal("ganit(os)(O) = os - 1 (displayed product form of os)", ganit(osd, c.O), osd - one()));
  }
  out.push_back(equal("gamit(os)(O) = os - 1", gamit(c.os, c.O), c.os - one()));
  out.push_back(equal("invmu(es) = push(es)", invmu(c.es), push(c.es)));
  out.push_back(equal("dilator via ganit(oz)^-1 = via ganit(pari(anti(os)))", ganit_inv(c.oz, c.To), c.D));
  out.push_back(lengths(equal("ess(empty) = 1", c.ess, one()), 0, 0));
  out.push_back(lengths(equal("oess(empty) = 1", c.oess, one()), 0, 0));
  out.push_back(equal("fragari(neg(ess), ess) = es", fragari(neg(c.ess), c.ess), c.es, 3));
  out.push_back(equal("E-neg = adari(ess) o neg o adari(ess)^-1", e_neg(c, B),
                      adari(c.ess, neg(adari(invgari(c.ess), B))), 3));
  out.push_back(equal("E-neg = adari(eess) o neg o adari(eess)^-1", e_neg(c, B),
                      adari(c.eess(), neg(adari(invgari(c.eess()), B))), 3));
  return out;
}

inline std::vector<Check> suite_dilator(const Canonical& c, const SamplePlan& plan) {
  const Subjects s{c, plan.seed};
  std::vector<Check> out;
  append(out, o_alternal_checks(c, "To", c.To));
  out.push_back(alternal_check("D is alternal", c.D));
  out.push_back(lengths(equal("S at length 1 is D", c.S, c.D), 1, 1));
  out.push_back(equal("der(S) = preari(S, D)", der(c.S), preari(c.S, c.D)));
  out.push_back(symmetral_check("ess is symmetral", c.ess));
  out.push_back(symmetral_check("oess is symmetral", c.oess));
  out.push_back(symmetral_check("eess is symmetral", c.eess()));
  out.push_back(symmetral_check("oss is symmetral", c.oss()));

  for (std::uint64_t k = 1; k <= 3; ++k) {
    const std::string tag = " #" + std::to_string(k);
    const Mould d = s.profile(ProfileKind::alternal, 40 + k);
    out.push_back(symmetral_check("alternal D gives symmetral S" + tag, solve_dilator_ode(d)));
    const Mould sym = s.profile(ProfileKind::symmetral, 50 + k);
    const Mould ex = extract_dilator(sym);
    out.push_back(equal("extracted D solves der(S) = preari(S, D)" + tag, der(sym), preari(sym, ex)));
    out.push_back(alternal_check("symmetral S gives alternal D" + tag, ex));
  }
  out.push_back(expect_failure(symmetral_check("generic D gives symmetral S (must fail)", solve_dilator_ode(s.generic(41)))));
  out.push_back(expect_failure(alternal_check("generic S gives alternal D (must fail)",
                                              extract_dilator(s.generic(42, EmptyClass::group)))));

  {
    const Mould b = s.profile(ProfileKind::alternal, 43);
    for (const auto& [label, a] : {std::pair<std::string, Mould>{"generic A", s.generic(44)},
                                   std::pair<std::string, Mould>{"symmetral A", s.profile(ProfileKind::symmetral, 45)}}) {
      out.push_back(on_pairs("arit(B)(A) on a shuffle equals the four-sum (" + label + ")",
                             [a, b, ar = arit(b, a)](EvalContext& ctx, const Word& x, const Word& y) {
                               return Values{shuffle_sum(ctx, ar, x, y), arit_shuffle_four_sum(ctx, b, a, x, y)};
                             }));
    }
  }
  {
    const Mould a = s.profile(ProfileKind::symmetral, 46), b = s.profile(ProfileKind::symmetral, 47);
    out.push_back(on_pairs("gaxit(A,B)(O) on a shuffle, A and B symmetral",
                           [a, b, ab = mu(a, b), o = c.O, g = gaxit(a, b, c.O)](EvalContext& ctx, const Word& x,
                                                                                 const Word& y) {
                             return Values{shuffle_sum(ctx, g, x, y), gaxit_o_shuffle_sum(ctx, a, b, ab, o, x, y)};
                           }));
  }
  {
    const Mould g = s.generic(48, EmptyClass::group);
    for (std::size_t n = 1; n <= 3; ++n)
      out.push_back(equal("mu^" + std::to_string(n) + "(S) binomial expansion", mu_power(g, n),
                          mu_factor_rhs(g, n, 16)));
  }
  return out;
}

inline std::vector<Check> suite_fundamental(const Canonical& c, const SamplePlan& plan) {
  const Subjects s{c, plan.seed};
  std::vector<Check> out;
  const Mould sym = s.profile(ProfileKind::symmetral, 61);
  out.push_back(equal("ganit(os) o gamit(os)^-1 = garit(invmu(os))", ganit(c.os, gamit_inv(c.os, sym)),
                      garit(invmu(c.os), sym)));
  out.push_back(equal("garit(os) = ganit(oz)^-1 o gamit(oz)", garit(c.os, sym),
                      ganit_oz_inv(c, gamit(c.oz, sym))));
  out.push_back(symmetral_check("garit(os) preserves symmetrality", garit(c.os, sym)));
  append(out, o_alternal_checks(c, "swap of the al_ol profile", swap(s.profile(ProfileKind::al_ol, 62))));

  const Mould g = s.generic(63, EmptyClass::group);
  out.push_back(equal("swap(fragari(swap A, swap oess)) = ganit(oz)(fragari(A, oess))",
                      swap(fragari(swap(g), swap(c.oess))), ganit(c.oz, fragari(g, c.oess))));
  out.push_back(equal("swap(fragari(swap A, swap oss)) = ganit(oz)(fragari(A, oss))",
                      swap(fragari(swap(g), swap(c.oss()))), ganit(c.oz, fragari(g, c.oss()))));

  const Mould p = pushsym(s.generic(64));
  out.push_back(equal("swap o adari(ess) = ganit(oz) o adari(oess) o swap on push-invariants",
                      swap(adari(c.ess, p)), ganit(c.oz, adari(c.oess, swap(p)))));
  out.push_back(equal("swap o adari(eess) = ganit(oz) o adari(oss) o swap on push-invariants",
                      swap(adari(c.eess(), p)), ganit(c.oz, adari(c.oss(), swap(p)))));

  const Mould alal = s.profile(ProfileKind::al_al_seed, 65);
  append(out, dimorphy_checks(c, "adari(ess)(al_al_seed)", adari(c.ess, alal), true));
  append(out, dimorphy_checks(c, "adari(eess)(al_al_seed)", adari(c.eess(), alal), true));
  const Mould alol = s.profile(ProfileKind::al_ol, 66);
  const Mould back = adari(invgari(c.ess), alol);
  append(out, dimorphy_checks(c, "adari(ess)^-1(al_ol)", back, false));
  out.push_back(equal("adari(ess)^-1(al_ol) is push-invariant", push(back), back));
  append(out, dimorphy_checks(c, "ari of two al_ol elements", ari(alol, s.profile(ProfileKind::al_ol, 67)), true));
  return out;
}

inline std::vector<Check> suite_senary(const Canonical& c, const SamplePlan& plan) {
  const Subjects s{c, plan.seed};
  const Mould B = s.generic(71), M = s.generic(72, EmptyClass::free);
  const Mould alol = s.profile(ProfileKind::al_ol, 73);
  std::vector<Check> out;
  out.push_back(equal("O-mantar fixes O-alternals", o_mantar(c, swap(alol)), swap(alol)));
  out.push_back(equal("O-mantar is an involution", o_mantar(c, o_mantar(c, B)), B));
  out.push_back(equal("gaxit(oz,oz) o mantar = O-mantar", gaxit(c.oz, c.oz, mantar(B)), o_mantar(c, B)));
  out.push_back(equal("E-negpush fixes al_ol", e_negpush(c, alol), alol));
  out.push_back(equal("E-push fixes al_ol", e_push(c, alol), alol));
  out.push_back(equal("E-sena fixes al_ol", e_sena(c, alol), alol));
  out.push_back(equal("E-push^-1 o E-push = id", e_push_inv(c, e_push(c, B)), B));
  out.push_back(equal("E-push^-1 explicit form", e_push_inv_explicit(c, B), e_push_inv(c, B)));
  out.push_back(equal("E-swap^-1 o E-swap = id", e_swap_inv(c, e_swap(c, B)), B, 3));
  out.push_back(equal("E-push = neg o mantar o E-swap o mantar o swap", e_push(c, B),
                      neg(mantar(e_swap(c, mantar(swap(B)))))));
  out.push_back(equal("E-swap^-1 first form = second form", e_swap_inv(c, B, 1), e_swap_inv(c, B, 2), 3));
  out.push_back(equal("E-swap^-1 first form = third form", e_swap_inv(c, B, 1), e_swap_inv(c, B, 3), 3));
  out.push_back(lengths(equal("E-ter is the identity at length 1", e_ter(c, B), B), 1, 1));
  out.push_back(equal("E-ter = mu(B,1-E) + answamu(B,E)", e_ter(c, B), e_ter_explicit(c, B)));
  out.push_back(equal("E-ter^-1 o E-ter = id", e_ter_inv(c, e_ter(c, B)), B));
  out.push_back(equal("E-ter^-1 answamu form = triple sum", e_ter_inv(c, B), e_ter_inv_sum(c, B)));
  out.push_back(equal("E-sena explicit form", e_sena(c, B), e_sena_explicit(c, B)));
  out.push_back(lengths(equal("E-sena is push at length 1", e_sena(c, B), push(B)), 1, 1));
  out.push_back(equal("invmu(es) = push(es)", invmu(c.es), push(c.es)));
  out.push_back(equal("girat(oz)^-1(oz) = 1+O", girat_inv(c.oz, c.oz), one() + c.O));

  const Mould X = mu(c.O, M);
  out.push_back(vanishes("(-R2+R3-R4)(mu(O,M)) = 0", -mu(c.O, push(X)) + push(mu(c.O, X)) - push(swamu(X, c.O))));
  out.push_back(vanishes("O-Rush(0) = 0", o_rush(c, zero())));
  out.push_back(equal("O-Rush form of the E-sena identity",
                      o_rush(c, mu(c.O, B) + mu(one() - c.O, swap(e_sena(c, swap(B))))), mu(B, one() - c.O)));
  for (std::uint64_t k = 1; k <= 10; ++k) {
    const Mould b = s.generic(100 + k);
    out.push_back(equal("(id - E-sena)(B) = swamu(es, (id - E-push)(B)) #" + std::to_string(k), b - e_sena(c, b),
                        swamu(c.es, b - e_push(c, b))));
  }
  for (std::uint64_t k = 1; k <= 5; ++k) {
    const Mould b = s.profile(ProfileKind::al_ol, 200 + k);
    out.push_back(vanishes("senary relation on al_ol #" + std::to_string(k), senary_defect(c, b)));
  }
  out.push_back(expect_failure(vanishes("senary relation on a generic mould (must fail)", senary_defect(c, B))));
  return out;
}

inline std::vector<Check> suite_push_sena(const Canonical& c, const SamplePlan& plan) {
  const Subjects s{c, plan.seed};
  std::vector<Check> out;
  const Mould inv_ess = invgari(c.ess);
  for (std::uint64_t k = 1; k <= 5; ++k) {
    const std::string tag = " #" + std::to_string(k);
    const Mould a = s.profile(ProfileKind::push_invariant, 300 + k);
    const Mould x = adari(c.ess, a), y = adari(c.eess(), a);
    out.push_back(equal("adari(ess) of a push-invariant is E-sena-invariant" + tag, e_sena(c, x), x));
    out.push_back(equal("adari(eess) of a push-invariant is E-sena-invariant" + tag, e_sena(c, y), y));
    const Mould back = adari(inv_ess, x);
    out.push_back(equal("adari(ess)^-1 restores push-invariance" + tag, push(back), back));
  }
  const Mould B = s.generic(310);
  for (const auto& [name, e] : {std::pair<std::string, Mould>{"eess", c.eess()}, std::pair<std::string, Mould>{"ess", c.ess}}) {
    const Mould pre = adari(invgari(e), B);
    out.push_back(equal("swamu(" + name + ", (id - push^-1)(adari(" + name + ")^-1(B))) = gari((id - E-push^-1)(B), " +
                            name + ")",
                        swamu(e, pre - push_inv(pre)), gari(B - e_push_inv(c, B), e)));
  }
  out.push_back(expect_failure(
      equal("adari(ess) of a generic mould is E-sena-invariant (must fail)", e_sena(c, adari(c.ess, B)), adari(c.ess, B))));
  return out;
}

inline std::vector<Check> suite_lemmas_6(const Canonical& c, const SamplePlan& plan) {
  const Subjects s{c, plan.seed};
  const Mould A = s.generic(401), B = s.generic(402), M = s.generic(403, EmptyClass::free);
  const Mould Y = s.generic(404, EmptyClass::group);
  const Mould sym = s.profile(ProfileKind::symmetral, 405);
  std::vector<Check> out;
  out.push_back(equal("irat(mantar X) o mantar = mantar o irat(push^-1 X)", irat(mantar(A), mantar(M)),
                      mantar(irat(push_inv(A), M))));
  out.push_back(equal("axit(A,B)(X) = mu(X, axit(A,B)(mantar X), X) for X = os", axit(A, B, c.os),
                      mu(c.os, axit(A, B, mantar(c.os)), c.os)));
  out.push_back(equal("axit(A,B)(X) = mu(X, axit(A,B)(mantar X), X) for symmetral X", axit(A, B, sym),
                      mu(sym, axit(A, B, mantar(sym)), sym)));
  out.push_back(equal("anti o garit(anti Y) o anti = garit(invmu Y)", anti(garit(anti(Y), anti(M))), garit(invmu(Y), M)));
  out.push_back(equal("pari o garit(pari Y) o pari = garit(Y)", pari(garit(pari(Y), pari(M))), garit(Y, M)));
  out.push_back(equal("garit(os) commutes with mantar", garit(c.os, mantar(M)), mantar(garit(c.os, M))));
  out.push_back(equal("garit(S) commutes with mantar for symmetral S", garit(sym, mantar(M)), mantar(garit(sym, M))));
  out.push_back(expect_failure(
      equal("garit(Y) commutes with mantar for generic Y (must fail)", garit(Y, mantar(M)), mantar(garit(Y, M)))));
  const Mould& oss = c.oss();
  out.push_back(equal("garit(oss)(invgari oss) = invmu(oss)", garit(oss, invgari(oss)), invmu(oss)));
  out.push_back(equal("garit(oss)(mantar(invgari oss)) = -oss", garit(oss, mantar(invgari(oss))), -oss));
  out.push_back(equal("ganit(oz)^-1 o swap o adari(eess) = fragari(preira(oss, swap A), oss)",
                      ganit_oz_inv(c, swap(adari(c.eess(), A))), fragari(preira(oss, swap(A)), oss)));
  return out;
}

inline std::vector<Check> suite_negelon(const Canonical&, const SamplePlan&) {
  std::vector<Check> out;
  auto tuple_points = [](const std::vector<NegelonTuple>& ts) {
    std::vector<Point> pts;
    for (const auto& t : ts) {
      Point p;
      p.at = "r=" + std::to_string(t.r) + ",k=" + std::to_string(t.k) + ",l=" + std::to_string(t.l) +
             ",h=" + std::to_string(t.h);
      p.lhs = t.value.str();
      p.rhs = "0";
      p.status = t.value.is_zero() ? Status::pass : Status::fail;
      pts.push_back(std::move(p));
    }
    return pts;
  };
  {
    Check k;
    k.name = "F(r,k,l,h) = 0 for 2 <= r <= 12, h >= 1, k+l+h <= r-1";
    k.scalar = [tuple_points] { return tuple_points(negelon_scan(12)); };
    out.push_back(std::move(k));
  }
  {
    Check k;
    k.name = "F(r,k,l,0) = 0 for 2 <= r <= 12 (must fail)";
    k.negative = true;
    k.scalar = [tuple_points] {
      auto all = negelon_scan(12, 0);
      std::erase_if(all, [](const NegelonTuple& t) { return t.h != 0; });
      return tuple_points(all);
    };
    out.push_back(std::move(k));
  }
  {
    Check k;
    k.name = "binomial identities behind the collapse of F";
    k.scalar = [] {
      std::vector<AuxFailure> bad;
      const std::size_t n = aux_identities(12, bad);
      std::vector<Point> pts;
      Point p;
      p.at = "n_max=12, " + std::to_string(n) + " tuples";
      p.lhs = std::to_string(bad.size());
      p.rhs = "0";
      p.status = bad.empty() ? Status::pass : Status::fail;
      if (!bad.empty()) p.note = bad.front().identity + " defect " + bad.front().defect.str();
      pts.push_back(std::move(p));
      return pts;
    };
    out.push_back(std::move(k));
  }
  return out;
}

inline const std::vector<Suite>& suite_registry() {
  static const std::vector<Suite> suites{
      {"unit-axioms", "Section 1", "flexion unit axioms and the closed forms of oz, ez, es, os", suite_unit_axioms},
      {"algebra-core", "Section 2.1", "mu, push, mantar, flexion actions, ari/gari, expari/logari, adari",
       suite_algebra_core},
      {"swamu", "Section 5", "swamu and answamu: flexion sums against conjugation forms", suite_swamu},
      {"symmetry", "Section 3", "generators, symmetry checkers and negative controls", suite_symmetry},
      {"mould-constants", "Section 4", "redistributed dilator, os, secondary bimoulds and their guards",
       suite_mould_constants},
      {"dilator", "Appendix A", "dilator ODE, bisymmetrality, shuffle expansions, mu powers", suite_dilator},
      {"fundamental", "Section 2.2", "twisted symmetries, fundamental identities, dimorphic transport",
       suite_fundamental},
      {"senary", "Theorem 1.1", "O-mantar, E-push, E-swap, E-ter, E-sena and the senary relation", suite_senary},
      {"push-sena", "Theorem 1.2", "push-invariants transported to E-sena-invariants", suite_push_sena},
      {"lemmas-6", "Section 6", "irat, axit and garit lemmas, garit(oss), the swap of adari(eess)", suite_lemmas_6},
      {"negelon", "Lemma negelon", "exact binomial quadruple sum and its auxiliary identities", suite_negelon},
  };
  return suites;
}

inline const Suite& find_suite(const std::string& name) {
  for (const auto& s : suite_registry())
    if (s.name == name) return s;
  throw std::out_of_range("unknown suite '" + name + "'");
}

/// Expands "all" and validates names.
inline std::vector<const Suite*> select_suites(const std::vector<std::string>& names) {
  std::vector<const Suite*> out;
  for (const auto& n : names) {
    if (n == "all") {
      for (const auto& s : suite_registry()) out.push_back(&s);
    } else {
      out.push_back(&find_suite(n));
    }
  }
  return out;
}

}  // namespace flexionlab
