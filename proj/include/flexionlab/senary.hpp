#pragma once

#include "flexionlab/canonical.hpp"

namespace flexionlab {

// ---------------------------------------------------------------------------
// Twisted push and its relatives.

inline Mould ganit_oz_inv(const Canonical& c, const Mould& a) { return ganit(pari(anti(c.os)), a); }

inline Mould o_mantar(const Canonical& c, const Mould& a) { return ganit(c.oz, mantar(ganit_oz_inv(c, a))); }

inline Mould e_negpush(const Canonical& c, const Mould& a) { return mantar(swap(o_mantar(c, swap(a)))); }
inline Mould e_negpush_inv(const Canonical& c, const Mould& a) { return swap(o_mantar(c, swap(mantar(a)))); }

inline Mould e_neg(const Canonical& c, const Mould& a) { return neg(adari(c.es, a)); }
inline Mould e_neg_inv(const Canonical& c, const Mould& a) { return adari(invgari(c.es), neg(a)); }

inline Mould e_push(const Canonical& c, const Mould& a) { return e_neg(c, e_negpush(c, a)); }
inline Mould e_push_inv(const Canonical& c, const Mould& a) { return e_negpush_inv(c, e_neg_inv(c, a)); }

/// Closed form of the inverse twisted push.
inline Mould e_push_inv_explicit(const Canonical& c, const Mould& a) {
  const Mould& o = c.O;
  const Mould sa = swap(a);
  return swap(mu(mu(one() - o, push(sa)) + push(mu(o, sa)) - push(swamu(sa, o)), c.oz));
}

inline Mould e_swap(const Canonical& c, const Mould& a) { return adari(c.es, swap(gaxit(c.oz, c.oz, a))); }

/// Inverse of e_swap. form 1 is the implementation, 2 and 3 are the alternative
/// expressions. Form 2 carries no swap around the answamu term.
inline Mould e_swap_inv(const Canonical& c, const Mould& b, int form = 1) {
  const Mould pes = pari(c.es);
  const Mould one_o = one() + c.O;
  switch (form) {
    case 2:
      return mu(pari(c.oz), swap(mu(one() + pes, b) - answamu(pes, b)), one_o);
    case 3:
      return mu(pari(c.oz), mu(swap(b), one_o) + swap(answamu(c.E, b) - mu(c.E, b)));
    default:
      return mu(swap(preari(pes, b)), one_o);
  }
}

// ---------------------------------------------------------------------------
// E-ter and E-sena.

/// B(w) - B(w')E(w_r) + B(w' fur w_r) E(w' fll w_r), w = w' w_r.
class ETerNode final : public Node {
 public:
  ETerNode(Mould b, Mould e)
      : Node("E-ter(" + ref(b) + ")", b.empty_class()), b_(std::move(b)), e_(std::move(e)) {}

  Rat compute(EvalContext& ctx, const Word& w) const override {
    if (w.empty()) return ctx.eval(b_, w);
    const WordView v(w);
    const auto head = v.first(w.size() - 1), last = v.last(1);
    Rat out = ctx.eval(b_, w);
    out -= ctx.eval(b_, to_word(head)) * ctx.eval(e_, to_word(last));
    out += ctx.eval(b_, fur(head, last)) * ctx.eval(e_, fll(head, last));
    return out;
  }

 private:
  Mould b_, e_;
};

/// sum over w = abc of B(a fur b) * Y(a fll b) * Z(c).
class TripleSumNode final : public Node {
 public:
  TripleSumNode(std::string label, Mould b, Mould y, Mould z)
      : Node(std::move(label), b.empty_class()), b_(std::move(b)), y_(std::move(y)), z_(std::move(z)) {}

  Rat compute(EvalContext& ctx, const Word& w) const override {
    const WordView v(w);
    const std::size_t r = w.size();
    Rat total;
    for (std::size_t i = 0; i <= r; ++i) {
      for (std::size_t j = i; j <= r; ++j) {
        const auto a = v.first(i), b = v.subspan(i, j - i), c = v.subspan(j);
        Rat z = ctx.eval(z_, to_word(c));
        if (z.is_zero()) continue;
        Rat x = ctx.eval(b_, fur(a, b));
        if (x.is_zero()) continue;
        total += x * ctx.eval(y_, fll(a, b)) * z;
      }
    }
    return total;
  }

 private:
  Mould b_, y_, z_;
};

inline Mould e_ter(const Canonical& c, const Mould& b) { return make_mould<ETerNode>(b, c.E); }
inline Mould e_ter_explicit(const Canonical& c, const Mould& b) { return mu(b, one() - c.E) + answamu(b, c.E); }
inline Mould e_ter_inv(const Canonical& c, const Mould& b) { return mu(answamu(b, invmu(c.es)), c.es); }
inline Mould e_ter_inv_sum(const Canonical& c, const Mould& b) {
  return make_mould<TripleSumNode>("E-ter^-1(" + ref(b) + ")", b, invmu(c.es), c.es);
}

inline Mould e_sena(const Canonical& c, const Mould& b) {
  return e_ter_inv(c, push(mantar(e_ter(c, mantar(b)))));
}

inline Mould e_sena_explicit(const Canonical& c, const Mould& b) {
  const Mould inner = b + mu(c.E, b) - swamu(b, c.E);
  return mu(swap(push_inv(mu(c.oz, swap(inner)))), c.es);
}

/// Vanishes exactly when B satisfies the senary relation.
inline Mould senary_defect(const Canonical& c, const Mould& b) {
  return e_ter(c, b) - push(mantar(e_ter(c, mantar(b))));
}

inline Mould o_rush(const Canonical& c, const Mould& x) {
  return mu(one() - c.O, push(x)) + push(mu(c.O, x)) - push(swamu(x, c.O));
}

}  // namespace flexionlab
