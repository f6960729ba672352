#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "flexionlab/mould.hpp"

namespace flexionlab {

namespace detail {

inline WordView sub(const Word& w, std::size_t from, std::size_t to) {
  return WordView(w).subspan(from, to - from);
}

inline Rat class_value(EmptyClass c, const char* op) {
  switch (c) {
    case EmptyClass::group: return Rat(1);
    case EmptyClass::lie: return Rat(0);
    case EmptyClass::free: break;
  }
  throw std::invalid_argument(std::string(op) + ": target must be group- or lie-class");
}

}  // namespace detail

// ---------------------------------------------------------------------------
// amit / anit.

/// amit(X)(A)(w) = sum_{w=abc, b,c nonempty} A(a ful(b,c)) X(flr(b,c)).
class AmitNode final : public Node {
 public:
  AmitNode(Mould x, Mould a)
      : Node("amit(" + ref(x) + ")(" + ref(a) + ")", EmptyClass::lie), x_(std::move(x)), a_(std::move(a)) {}

  Rat compute(EvalContext& ctx, const Word& w) const override {
    using detail::sub;
    const std::size_t r = w.size();
    Rat s;
    for (std::size_t i = 0; i + 2 <= r; ++i) {
      for (std::size_t j = i + 1; j < r; ++j) {
        const auto a = sub(w, 0, i), b = sub(w, i, j), c = sub(w, j, r);
        Rat x = ctx.eval(x_, flr(b, c));
        if (x.is_zero()) continue;
        s += x * ctx.eval(a_, concat(a, ful(b, c)));
      }
    }
    return s;
  }

 private:
  Mould x_, a_;
};

/// anit(Y)(A)(w) = sum_{w=abc, a,b nonempty} A(fur(a,b) c) Y(fll(a,b)).
class AnitNode final : public Node {
 public:
  AnitNode(Mould y, Mould a)
      : Node("anit(" + ref(y) + ")(" + ref(a) + ")", EmptyClass::lie), y_(std::move(y)), a_(std::move(a)) {}

  Rat compute(EvalContext& ctx, const Word& w) const override {
    using detail::sub;
    const std::size_t r = w.size();
    Rat s;
    for (std::size_t i = 1; i < r; ++i) {
      for (std::size_t j = i + 1; j <= r; ++j) {
        const auto a = sub(w, 0, i), b = sub(w, i, j), c = sub(w, j, r);
        Rat y = ctx.eval(y_, fll(a, b));
        if (y.is_zero()) continue;
        s += y * ctx.eval(a_, concat(fur(a, b), c));
      }
    }
    return s;
  }

 private:
  Mould y_, a_;
};

inline Mould amit(const Mould& x, const Mould& a) { return make_mould<AmitNode>(x, a); }
inline Mould anit(const Mould& y, const Mould& a) { return make_mould<AnitNode>(y, a); }

inline Mould axit(const Mould& x, const Mould& y, const Mould& a) {
  return lincomb({{1, amit(x, a)}, {1, anit(y, a)}}, "axit(" + ref(x) + "," + ref(y) + ")(" + ref(a) + ")");
}
inline Mould arit(const Mould& x, const Mould& a) {
  return lincomb({{1, amit(x, a)}, {-1, anit(x, a)}}, "arit(" + ref(x) + ")(" + ref(a) + ")");
}
inline Mould irat(const Mould& x, const Mould& a) {
  return lincomb({{1, amit(x, a)}, {-1, anit(push(x), a)}}, "irat(" + ref(x) + ")(" + ref(a) + ")");
}

inline Mould preari(const Mould& a, const Mould& b) {
  return lincomb({{1, arit(b, a)}, {1, mu(a, b)}}, "preari(" + ref(a) + "," + ref(b) + ")");
}
inline Mould ari(const Mould& a, const Mould& b) {
  return lincomb({{1, arit(b, a)}, {-1, arit(a, b)}, {1, mu(a, b)}, {-1, mu(b, a)}},
                 "ari(" + ref(a) + "," + ref(b) + ")");
}

// ---------------------------------------------------------------------------
// swamu / answamu through their flexion sums.

class SwamuNode final : public Node {
 public:
  SwamuNode(Mould a, Mould b, bool anti)
      : Node(std::string(anti ? "answamu(" : "swamu(") + ref(a) + "," + ref(b) + ")",
             MuNode::classify(a.empty_class(), b.empty_class())),
        a_(std::move(a)), b_(std::move(b)), anti_(anti) {}

  Rat compute(EvalContext& ctx, const Word& w) const override {
    using detail::sub;
    const std::size_t r = w.size();
    Rat s;
    for (std::size_t i = 0; i <= r; ++i) {
      const auto a = sub(w, 0, i), b = sub(w, i, r);
      Rat x = ctx.eval(b_, anti_ ? fll(a, b) : flr(a, b));
      if (x.is_zero()) continue;
      s += x * ctx.eval(a_, anti_ ? fur(a, b) : ful(a, b));
    }
    return s;
  }

 private:
  Mould a_, b_;
  bool anti_;
};

/// swamu(A,B)(w) = sum_{w=ab} A(ful(a,b)) B(flr(a,b)).
inline Mould swamu(const Mould& a, const Mould& b) { return make_mould<SwamuNode>(a, b, false); }
/// answamu(A,B)(w) = sum_{w=ab} A(fur(a,b)) B(fll(a,b)).
inline Mould answamu(const Mould& a, const Mould& b) { return make_mould<SwamuNode>(a, b, true); }

// ---------------------------------------------------------------------------
// gaxit.

/// Group-level action. A term is indexed by a nonempty set of kept positions
/// whose maximal runs b_1..b_s are separated by gaps; the gap in front of b_1 is
/// a_1, the gap after b_s is c_s and every interior gap is split as c_i a_{i+1}.
/// Term: A(F_1..F_s) prod X(flr(a_i,b_i)) prod Y(fll(b_i,c_i)),
/// F_i = ful(a_i, fur(b_i, c_i)).
class GaxitNode final : public Node {
 public:
  GaxitNode(Mould x, Mould y, Mould a)
      : Node("gaxit(" + ref(x) + "," + ref(y) + ")(" + ref(a) + ")", a.empty_class()),
        x_(std::move(x)), y_(std::move(y)), a_(std::move(a)) {
    require_group(x_, "gaxit");
    require_group(y_, "gaxit");
  }

  Rat compute(EvalContext& ctx, const Word& w) const override {
    const std::size_t r = w.size();
    if (r == 0) return ctx.eval(a_, w);
    Rat total;
    std::vector<std::pair<std::size_t, std::size_t>> runs;
    for (unsigned mask = 1; mask < (1u << r); ++mask) {
      runs.clear();
      for (std::size_t i = 0; i < r;) {
        if (!(mask >> i & 1u)) { ++i; continue; }
        std::size_t j = i;
        while (j < r && (mask >> j & 1u)) ++j;
        runs.emplace_back(i, j);
        i = j;
      }
      // cut[i] in [runs[i].second, runs[i+1].first] splits the interior gap i.
      std::vector<std::size_t> cut(runs.size() - 1);
      for (std::size_t i = 0; i + 1 < runs.size(); ++i) cut[i] = runs[i].second;
      while (true) {
        total += term(ctx, w, runs, cut);
        std::size_t k = 0;
        while (k < cut.size() && cut[k] == runs[k + 1].first) {
          cut[k] = runs[k].second;
          ++k;
        }
        if (k == cut.size()) break;
        ++cut[k];
      }
    }
    return total;
  }

 private:
  Rat term(EvalContext& ctx, const Word& w, const std::vector<std::pair<std::size_t, std::size_t>>& runs,
           const std::vector<std::size_t>& cut) const {
    using detail::sub;
    const std::size_t s = runs.size();
    Rat factor(1);
    Word inner;
    for (std::size_t i = 0; i < s; ++i) {
      const std::size_t a_from = i == 0 ? 0 : cut[i - 1];
      const std::size_t c_to = i + 1 == s ? w.size() : cut[i];
      const auto a = sub(w, a_from, runs[i].first);
      const auto b = sub(w, runs[i].first, runs[i].second);
      const auto c = sub(w, runs[i].second, c_to);
      factor *= ctx.eval(x_, flr(a, b));
      if (factor.is_zero()) return factor;
      factor *= ctx.eval(y_, fll(b, c));
      if (factor.is_zero()) return factor;
      const Word f = ful(a, fur(b, c));
      inner.insert(inner.end(), f.begin(), f.end());
    }
    return factor * ctx.eval(a_, inner);
  }

  Mould x_, y_, a_;
};

inline Mould gaxit(const Mould& x, const Mould& y, const Mould& a) { return make_mould<GaxitNode>(x, y, a); }
inline Mould gamit(const Mould& x, const Mould& a) { return gaxit(x, one(), a); }
inline Mould ganit(const Mould& y, const Mould& a) { return gaxit(one(), y, a); }
inline Mould garit(const Mould& s, const Mould& a) { return gaxit(s, invmu(s), a); }

/// Z with gamit(X)(Z) = Y.
inline Mould gamit_inv(const Mould& x, const Mould& y) {
  return solve_unitriangular("gamit(" + ref(x) + ")^-1(" + ref(y) + ")",
                             [x](const Mould& z) { return gamit(x, z); }, y,
                             detail::class_value(y.empty_class(), "gamit_inv"), y.empty_class());
}
/// Z with ganit(Y)(Z) = A.
inline Mould ganit_inv(const Mould& y, const Mould& a) {
  return solve_unitriangular("ganit(" + ref(y) + ")^-1(" + ref(a) + ")",
                             [y](const Mould& z) { return ganit(y, z); }, a,
                             detail::class_value(a.empty_class(), "ganit_inv"), a.empty_class());
}

// ---------------------------------------------------------------------------
// The group law and its companions.

inline Mould gari(const Mould& a, const Mould& b) {
  require_group(b, "gari");
  return mu(garit(b, a), b);
}

inline Mould invgari(const Mould& a) {
  require_group(a, "invgari");
  return solve_unitriangular("invgari(" + ref(a) + ")", [a](const Mould& x) { return gari(a, x); }, one(),
                             Rat(1), EmptyClass::group);
}

inline Mould fragari(const Mould& a, const Mould& b) { return gari(a, invgari(b)); }

inline Mould expari(const Mould& a) {
  if (!a.is_lie()) throw std::invalid_argument("expari needs a lie-class mould, got " + a.label());
  return make_mould<SeriesNode>(
      "expari(" + ref(a) + ")", EmptyClass::group,
      [](std::size_t n) { return inverse(factorial(static_cast<long>(n))); },
      [a](std::size_t n, const std::vector<Mould>& prev) {
        if (n == 0) return one();
        if (n == 1) return a;
        return preari(prev[n - 1], a);
      });
}

inline Mould logari(const Mould& m) {
  require_group(m, "logari");
  return solve_unitriangular("logari(" + ref(m) + ")", [](const Mould& x) { return expari(x); }, m, Rat(0),
                             EmptyClass::lie);
}

/// adari(M)(A) = gari(preari(M,A), invgari(M)).
inline Mould adari(const Mould& m, const Mould& a) {
  return gari(preari(m, a), invgari(m));
}

/// adari through the nested ari series in logari(M).
inline Mould adari_series(const Mould& m, const Mould& a) {
  const Mould l = logari(m);
  return make_mould<SeriesNode>(
      "adari_series(" + ref(m) + ")(" + ref(a) + ")", a.empty_class(),
      [](std::size_t n) { return inverse(factorial(static_cast<long>(n))); },
      [l, a](std::size_t n, const std::vector<Mould>& prev) {
        return n == 0 ? a : ari(l, prev[n - 1]);
      });
}

// ---------------------------------------------------------------------------
// Conjugates by swap.

inline Mould gira(const Mould& a, const Mould& b) { return swap(gari(swap(a), swap(b))); }
inline Mould preira(const Mould& a, const Mould& b) { return swap(preari(swap(a), swap(b))); }
inline Mould fragira(const Mould& a, const Mould& b) { return swap(fragari(swap(a), swap(b))); }
inline Mould girat(const Mould& b, const Mould& a) { return mu(gira(a, b), invmu(b)); }

/// Z with girat(B)(Z) = Y.
inline Mould girat_inv(const Mould& b, const Mould& y) {
  return solve_unitriangular("girat(" + ref(b) + ")^-1(" + ref(y) + ")",
                             [b](const Mould& z) { return girat(b, z); }, y,
                             detail::class_value(y.empty_class(), "girat_inv"), y.empty_class());
}

}  // namespace flexionlab
