#pragma once

#include <memory>
#include <mutex>
#include <string>

#include "flexionlab/flexion.hpp"
#include "flexionlab/units.hpp"

namespace flexionlab {

inline Mould unit_E(const FlexionUnit& u) { return length1("E", u.E); }
inline Mould unit_O(const FlexionUnit& u) { return length1("O", u.O); }

/// os(w) = prod_i O(u_1+..+u_i; v_i - v_{i+1}), v_{r+1} = 0. Equal to swap(ez).
inline Mould mould_os(const FlexionUnit& u) {
  return primitive("os", EmptyClass::group, [O = u.O](const Word& w) {
    Rat out(1), us;
    for (std::size_t i = 0; i < w.size(); ++i) {
      us += w[i].u;
      out *= O({us, i + 1 < w.size() ? w[i].v - w[i + 1].v : w[i].v});
    }
    return out;
  });
}

/// The product displayed next to the ganit(os)(O) identity: prod_i O(u_1+..+u_i; v_i - v_{i-1}), v_0 = 0.
/// Coincides with anti(os) whenever O ignores u.
inline Mould mould_os_display(const FlexionUnit& u) {
  return primitive("os_display", EmptyClass::group, [O = u.O](const Word& w) {
    Rat out(1), us, prev_v;
    for (const auto& l : w) {
      us += l.u;
      out *= O({us, l.v - prev_v});
      prev_v = l.v;
    }
    return out;
  });
}

inline Mould mould_oz(const FlexionUnit& u) { return invmu(one() - unit_O(u)); }
inline Mould mould_ez(const FlexionUnit& u) { return invmu(one() - unit_E(u)); }
inline Mould mould_es(const FlexionUnit& u) { return swap(mould_oz(u)); }

/// Redistributed dilator. With r = 0 the node is the weighted sum over all
/// lengths, otherwise the single length-r component.
class RoNode final : public Node {
 public:
  RoNode(Mould oz, Mould o, std::size_t r)
      : Node(r ? "ro" + std::to_string(r) : std::string("To"), EmptyClass::lie), oz_(std::move(oz)), o_(std::move(o)), r_(r) {}

  Rat compute(EvalContext& ctx, const Word& w) const override {
    const std::size_t s = w.size();
    if (s == 0 || (r_ != 0 && s != r_)) return Rat(0);
    const WordView v(w);
    Rat total;
    for (std::size_t j = 1; j <= s; ++j) {
      const auto p = v.first(j - 1), b = v.subspan(j - 1, 1), q = v.subspan(j);
      Rat left = ctx.eval(oz_, flr(p, b));
      if (left.is_zero()) continue;
      Rat mid = ctx.eval(o_, ful(p, fur(b, q)));
      Rat right = ctx.eval(oz_, fll(b, q));
      total += Rat(static_cast<long>(s + 1 - j)) * left * mid * right;
    }
    if (r_ == 0) total /= Rat(static_cast<long>(s * (s + 1)));
    return total;
  }

 private:
  Mould oz_, o_;
  std::size_t r_;
};

/// S with S(empty) = 1 and der(S) = preari(S, D).
inline Mould solve_dilator_ode(const Mould& d) {
  if (!d.is_lie()) throw std::invalid_argument("dilator must be lie-class");
  return recursive("ode(" + ref(d) + ")", EmptyClass::group, Rat(1), [d](const Mould& trial, std::size_t r) {
    return Rat(1, static_cast<long>(r)) * preari(trial, d);
  });
}

/// Every named bimould attached to one flexion unit. Built once and shared.
class Canonical {
 public:
  explicit Canonical(FlexionUnit unit) : unit_(std::move(unit)) {
    E = unit_E(unit_);
    O = unit_O(unit_);
    oz = mould_oz(unit_);
    ez = mould_ez(unit_);
    os = mould_os(unit_);
    es = swap(oz);
    To = make_mould<RoNode>(oz, O, 0);
    D = ganit(pari(anti(os)), To);
    S = solve_dilator_ode(D);
    oess = invgari(S);
    ess = swap(oess);
  }

  const FlexionUnit& unit() const noexcept { return unit_; }

  Mould ro(std::size_t r) const { return make_mould<RoNode>(oz, O, r); }

  /// Same construction for the conjugate unit.
  const Canonical& mirror() const {
    std::call_once(mirror_once_, [this] { mirror_ = std::make_unique<Canonical>(unit_conjugate(unit_)); });
    return *mirror_;
  }
  const Mould& eess() const { return mirror().oess; }
  const Mould& oss() const { return mirror().ess; }

  Mould E, O, oz, ez, os, es, To, D, S, oess, ess;

 private:
  FlexionUnit unit_;
  mutable std::once_flag mirror_once_;
  mutable std::unique_ptr<Canonical> mirror_;
};

}  // namespace flexionlab
