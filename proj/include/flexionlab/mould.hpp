#pragma once

#include <array>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "flexionlab/rat.hpp"
#include "flexionlab/word.hpp"

namespace flexionlab {

/// Value class at the empty word: group-like (1), Lie-like (0) or unconstrained.
enum class EmptyClass { group, lie, free };

inline const char* to_string(EmptyClass c) {
  switch (c) {
    case EmptyClass::group: return "group";
    case EmptyClass::lie: return "lie";
    case EmptyClass::free: return "free";
  }
  return "?";
}

class EvalContext;

class Node {
 public:
  Node(std::string label, EmptyClass cls) : id_(next_id()), label_(std::move(label)), cls_(cls) {}
  virtual ~Node() = default;
  Node(const Node&) = delete;
  Node& operator=(const Node&) = delete;

  std::uint64_t id() const noexcept { return id_; }
  const std::string& label() const noexcept { return label_; }
  EmptyClass empty_class() const noexcept { return cls_; }

  virtual Rat compute(EvalContext& ctx, const Word& w) const = 0;

 private:
  static std::uint64_t next_id() {
    static std::atomic<std::uint64_t> counter{1};
    return counter.fetch_add(1, std::memory_order_relaxed);
  }

  std::uint64_t id_;
  std::string label_;
  EmptyClass cls_;
};

/// Cheap handle on an immutable expression node.
class Mould {
 public:
  Mould() = default;
  explicit Mould(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

  const Node& node() const { return *node_; }
  const std::shared_ptr<const Node>& ptr() const noexcept { return node_; }
  explicit operator bool() const noexcept { return static_cast<bool>(node_); }
  std::uint64_t id() const { return node_->id(); }
  const std::string& label() const { return node_->label(); }
  EmptyClass empty_class() const { return node_->empty_class(); }
  bool is_group() const { return empty_class() == EmptyClass::group; }
  bool is_lie() const { return empty_class() == EmptyClass::lie; }

 private:
  std::shared_ptr<const Node> node_;
};

/// Short reference to an operand inside a parent label; long labels collapse to the node id.
inline std::string ref(const Mould& m) {
  return m.label().size() <= 40 ? m.label() : "#" + std::to_string(m.id());
}

template <class N, class... Args>
Mould make_mould(Args&&... args) {
  return Mould(std::make_shared<const N>(std::forward<Args>(args)...));
}

struct EvalStats {
  std::atomic<std::uint64_t> evaluations{0};
  std::atomic<std::uint64_t> memo_hits{0};
  std::atomic<std::uint64_t> div_by_zero{0};
};

/// Memo table plus evaluation entry point. Safe to share between threads; a value
/// is computed outside the lock and the first stored copy wins, so every reader
/// sees the same Rat.
class EvalContext {
 public:
  explicit EvalContext(int retry_cap = 8) : retry_cap_(retry_cap) {}

  int retry_cap() const noexcept { return retry_cap_; }
  const EvalStats& stats() const noexcept { return stats_; }

  Rat eval(const Mould& m, const Word& w) { return eval(m.node(), w); }

  Rat eval(const Node& n, const Word& w) {
    stats_.evaluations.fetch_add(1, std::memory_order_relaxed);
    const KeyRef ref{n.id(), &w};
    auto& shard = shards_[KeyHash{}(ref) % kShards];
    {
      std::lock_guard lock(shard.mu);
      if (auto it = shard.map.find(ref); it != shard.map.end()) {
        stats_.memo_hits.fetch_add(1, std::memory_order_relaxed);
        return it->second;
      }
    }
    Rat value;
    try {
      value = n.compute(*this, w);
    } catch (DivByZero& e) {
      if (!e.located()) {
        stats_.div_by_zero.fetch_add(1, std::memory_order_relaxed);
        e.locate(n.label() + " at " + to_string(w));
      }
      throw;
    }
    if (w.empty()) check_empty(n, value);
    std::lock_guard lock(shard.mu);
    return shard.map.try_emplace(Key{n.id(), w}, std::move(value)).first->second;
  }

  std::size_t memo_size() const {
    std::size_t total = 0;
    for (const auto& s : shards_) {
      std::lock_guard lock(s.mu);
      total += s.map.size();
    }
    return total;
  }

 private:
  struct Key {
    std::uint64_t id;
    Word word;
  };
  struct KeyRef {
    std::uint64_t id;
    const Word* word;
  };
  struct KeyHash {
    using is_transparent = void;
    std::size_t operator()(const Key& k) const noexcept { return combine(k.id, k.word); }
    std::size_t operator()(const KeyRef& k) const noexcept { return combine(k.id, *k.word); }
    static std::size_t combine(std::uint64_t id, const Word& w) {
      return static_cast<std::size_t>(mix64(id ^ (WordHash{}(w) * 0x9e3779b97f4a7c15ULL)));
    }
  };
  struct KeyEq {
    using is_transparent = void;
    bool operator()(const Key& a, const Key& b) const { return a.id == b.id && a.word == b.word; }
    bool operator()(const KeyRef& a, const Key& b) const { return a.id == b.id && *a.word == b.word; }
    bool operator()(const Key& a, const KeyRef& b) const { return a.id == b.id && a.word == *b.word; }
  };
  struct Shard {
    mutable std::mutex mu;
    std::unordered_map<Key, Rat, KeyHash, KeyEq> map;
  };

  static void check_empty(const Node& n, const Rat& value) {
    const EmptyClass c = n.empty_class();
    if ((c == EmptyClass::group && !value.is_one()) || (c == EmptyClass::lie && !value.is_zero())) {
      throw std::logic_error("empty-word class violated by " + n.label() + ": declared " +
                             to_string(c) + ", value " + value.str());
    }
  }

  static constexpr std::size_t kShards = 64;
  int retry_cap_;
  EvalStats stats_;
  std::array<Shard, kShards> shards_;
};

// ---------------------------------------------------------------------------
// Leaves.

/// Mould given by an arbitrary function of the word.
class PrimitiveNode final : public Node {
 public:
  using Fn = std::function<Rat(const Word&)>;
  PrimitiveNode(std::string label, EmptyClass cls, Fn fn) : Node(std::move(label), cls), fn_(std::move(fn)) {}
  Rat compute(EvalContext&, const Word& w) const override { return fn_(w); }

 private:
  Fn fn_;
};

inline Mould primitive(std::string label, EmptyClass cls, PrimitiveNode::Fn fn) {
  return make_mould<PrimitiveNode>(std::move(label), cls, std::move(fn));
}

/// Mould concentrated at length 1.
inline Mould length1(std::string label, std::function<Rat(const Biletter&)> f) {
  return primitive(std::move(label), EmptyClass::lie,
                   [f = std::move(f)](const Word& w) { return w.size() == 1 ? f(w[0]) : Rat(0); });
}

inline const Mould& one() {
  static const Mould m = primitive("1", EmptyClass::group, [](const Word& w) { return Rat(w.empty() ? 1 : 0); });
  return m;
}

inline const Mould& zero() {
  static const Mould m = primitive("0", EmptyClass::lie, [](const Word&) { return Rat(0); });
  return m;
}

// ---------------------------------------------------------------------------
// Linear combinations.

class LinCombNode final : public Node {
 public:
  using Terms = std::vector<std::pair<Rat, Mould>>;
  LinCombNode(std::string label, Terms terms)
      : Node(std::move(label), classify(terms)), terms_(std::move(terms)) {}

  Rat compute(EvalContext& ctx, const Word& w) const override {
    Rat s;
    for (const auto& [c, m] : terms_) s += c * ctx.eval(m, w);
    return s;
  }

  static EmptyClass classify(const Terms& terms) {
    Rat at_empty;
    for (const auto& [c, m] : terms) {
      switch (m.empty_class()) {
        case EmptyClass::group: at_empty += c; break;
        case EmptyClass::lie: break;
        case EmptyClass::free: if (!c.is_zero()) return EmptyClass::free; break;
      }
    }
    if (at_empty.is_zero()) return EmptyClass::lie;
    if (at_empty.is_one()) return EmptyClass::group;
    return EmptyClass::free;
  }

 private:
  Terms terms_;
};

inline Mould lincomb(LinCombNode::Terms terms, std::string label = "lincomb") {
  return make_mould<LinCombNode>(std::move(label), std::move(terms));
}

inline Mould operator+(const Mould& a, const Mould& b) { return lincomb({{1, a}, {1, b}}, "(" + ref(a) + "+" + ref(b) + ")"); }
inline Mould operator-(const Mould& a, const Mould& b) { return lincomb({{1, a}, {-1, b}}, "(" + ref(a) + "-" + ref(b) + ")"); }
inline Mould operator-(const Mould& a) { return lincomb({{-1, a}}, "-" + ref(a)); }
inline Mould operator*(const Rat& c, const Mould& a) { return lincomb({{c, a}}, c.str() + "*" + ref(a)); }

// ---------------------------------------------------------------------------
// Unary pullbacks.

enum class Unary { anti, pari, neg, swap, mantar, der, leng };

class UnaryNode final : public Node {
 public:
  UnaryNode(Unary kind, Mould a, std::size_t r = 0)
      : Node(name(kind, a, r), classify(kind, a.empty_class(), r)), kind_(kind), a_(std::move(a)), r_(r) {}

  Rat compute(EvalContext& ctx, const Word& w) const override {
    const std::size_t l = w.size();
    switch (kind_) {
      case Unary::anti: return ctx.eval(a_, reverse(w));
      case Unary::pari: return l % 2 ? -ctx.eval(a_, w) : ctx.eval(a_, w);
      case Unary::neg: return ctx.eval(a_, negate(w));
      case Unary::swap: return ctx.eval(a_, swap_pullback(w));
      case Unary::mantar: {
        Rat x = ctx.eval(a_, reverse(w));
        return l % 2 ? x : -x;
      }
      case Unary::der: return l == 0 ? Rat(0) : Rat(static_cast<long>(l)) * ctx.eval(a_, w);
      case Unary::leng: return l == r_ ? ctx.eval(a_, w) : Rat(0);
    }
    return Rat(0);
  }

 private:
  static std::string name(Unary k, const Mould& a, std::size_t r) {
    static const char* names[] = {"anti", "pari", "neg", "swap", "mantar", "der", "leng"};
    std::string s = names[static_cast<int>(k)];
    if (k == Unary::leng) s += std::to_string(r);
    return s + "(" + ref(a) + ")";
  }
  static EmptyClass classify(Unary k, EmptyClass c, std::size_t r) {
    switch (k) {
      case Unary::mantar: return c == EmptyClass::lie ? c : EmptyClass::free;
      case Unary::der: return EmptyClass::lie;
      case Unary::leng: return r == 0 ? c : EmptyClass::lie;
      default: return c;
    }
  }

  Unary kind_;
  Mould a_;
  std::size_t r_;
};

inline Mould anti(const Mould& a) { return make_mould<UnaryNode>(Unary::anti, a); }
inline Mould pari(const Mould& a) { return make_mould<UnaryNode>(Unary::pari, a); }
inline Mould neg(const Mould& a) { return make_mould<UnaryNode>(Unary::neg, a); }
inline Mould swap(const Mould& a) { return make_mould<UnaryNode>(Unary::swap, a); }
/// (-1)^(l-1) A(reversed word).
inline Mould mantar(const Mould& a) { return make_mould<UnaryNode>(Unary::mantar, a); }
inline Mould der(const Mould& a) { return make_mould<UnaryNode>(Unary::der, a); }
inline Mould leng(std::size_t r, const Mould& a) { return make_mould<UnaryNode>(Unary::leng, a, r); }

inline Mould push(const Mould& a) { return neg(anti(swap(anti(swap(a))))); }
inline Mould push_inv(const Mould& a) { return swap(anti(swap(anti(neg(a))))); }

// ---------------------------------------------------------------------------
// mu and its inverse.

class MuNode final : public Node {
 public:
  MuNode(Mould a, Mould b)
      : Node("mu(" + ref(a) + "," + ref(b) + ")", classify(a.empty_class(), b.empty_class())),
        a_(std::move(a)), b_(std::move(b)) {}

  Rat compute(EvalContext& ctx, const Word& w) const override {
    Rat s;
    const WordView v(w);
    for (std::size_t i = 0; i <= w.size(); ++i) {
      Rat x = ctx.eval(a_, to_word(v.first(i)));
      if (x.is_zero()) continue;
      s += x * ctx.eval(b_, to_word(v.subspan(i)));
    }
    return s;
  }

  static EmptyClass classify(EmptyClass a, EmptyClass b) {
    if (a == EmptyClass::lie || b == EmptyClass::lie) return EmptyClass::lie;
    if (a == EmptyClass::group && b == EmptyClass::group) return EmptyClass::group;
    return EmptyClass::free;
  }

 private:
  Mould a_, b_;
};

inline Mould mu(const Mould& a, const Mould& b) { return make_mould<MuNode>(a, b); }
inline Mould mu(const Mould& a, const Mould& b, const Mould& c) { return mu(mu(a, b), c); }
inline Mould lu(const Mould& a, const Mould& b) {
  return lincomb({{1, mu(a, b)}, {-1, mu(b, a)}}, "lu(" + ref(a) + "," + ref(b) + ")");
}

inline void require_group(const Mould& a, const char* op) {
  if (!a.is_group()) throw std::invalid_argument(std::string(op) + " needs a group-class mould, got " + a.label());
}

/// X(0) = 1, X(w) = -sum_{w=ab, a nonempty} A(a) X(b).
class InvMuNode final : public Node {
 public:
  explicit InvMuNode(Mould a) : Node("invmu(" + ref(a) + ")", EmptyClass::group), a_(std::move(a)) {
    require_group(a_, "invmu");
  }

  Rat compute(EvalContext& ctx, const Word& w) const override {
    if (w.empty()) return Rat(1);
    Rat s;
    const WordView v(w);
    for (std::size_t i = 1; i <= w.size(); ++i) {
      Rat x = ctx.eval(a_, to_word(v.first(i)));
      if (x.is_zero()) continue;
      s -= x * ctx.eval(*this, to_word(v.subspan(i)));
    }
    return s;
  }

 private:
  Mould a_;
};

inline Mould invmu(const Mould& a) { return make_mould<InvMuNode>(a); }

/// Group-level counterpart of mantar; symmetral moulds are fixed points.
inline Mould gantar(const Mould& a) { return anti(pari(invmu(a))); }

// ---------------------------------------------------------------------------
// Length-recursive constructions.

/// Agrees with an owner node below length r and vanishes from length r on.
class TruncNode final : public Node {
 public:
  TruncNode(const Node* owner, std::size_t r)
      : Node("trunc" + std::to_string(r) + "(#" + std::to_string(owner->id()) + ")", owner->empty_class()), owner_(owner), r_(r) {}

  Rat compute(EvalContext& ctx, const Word& w) const override {
    return w.size() < r_ ? ctx.eval(*owner_, w) : Rat(0);
  }

 private:
  const Node* owner_;  // owner keeps this node alive, never the reverse
  std::size_t r_;
};

/// X(empty) = empty_value and, at length r >= 1, X(w) = builder(Trunc_r X, r)(w).
/// Well defined whenever builder(T, r) at length r only reads T below length r.
class RecursiveNode final : public Node {
 public:
  using Builder = std::function<Mould(const Mould& trial, std::size_t r)>;
  RecursiveNode(std::string label, EmptyClass cls, Rat empty_value, Builder builder)
      : Node(std::move(label), cls), empty_(std::move(empty_value)), builder_(std::move(builder)) {}

  Rat compute(EvalContext& ctx, const Word& w) const override {
    if (w.empty()) return empty_;
    return ctx.eval(expression(w.size()), w);
  }

 private:
  const Mould& expression(std::size_t r) const {
    std::lock_guard lock(mu_);
    auto it = built_.find(r);
    if (it == built_.end()) {
      Mould trial = make_mould<TruncNode>(this, r);
      it = built_.emplace(r, builder_(trial, r)).first;
    }
    return it->second;
  }

  Rat empty_;
  Builder builder_;
  mutable std::mutex mu_;
  mutable std::map<std::size_t, Mould> built_;
};

inline Mould recursive(std::string label, EmptyClass cls, Rat empty_value, RecursiveNode::Builder builder) {
  return make_mould<RecursiveNode>(std::move(label), cls, std::move(empty_value), std::move(builder));
}

/// Solves phi(X) = target for an operator of the form phi(X) = X + (terms that
/// read X only at shorter words).
inline Mould solve_unitriangular(std::string label, std::function<Mould(const Mould&)> phi,
                                 const Mould& target, Rat empty_value, EmptyClass cls) {
  return recursive(std::move(label), cls, std::move(empty_value),
                   [phi = std::move(phi), target](const Mould& trial, std::size_t) {
                     return target - phi(trial);
                   });
}

/// Per-length finite series: value at a word of length r is
/// sum_{n=0}^{r} coeff(n) * term(n)(w). Terms are built lazily.
class SeriesNode final : public Node {
 public:
  using Term = std::function<Mould(std::size_t n, const std::vector<Mould>& previous)>;
  SeriesNode(std::string label, EmptyClass cls, std::function<Rat(std::size_t)> coeff, Term term)
      : Node(std::move(label), cls), coeff_(std::move(coeff)), term_(std::move(term)) {}

  Rat compute(EvalContext& ctx, const Word& w) const override {
    Rat s;
    for (std::size_t n = 0; n <= w.size(); ++n) {
      Rat c = coeff_(n);
      if (c.is_zero()) continue;
      s += c * ctx.eval(term(n), w);
    }
    return s;
  }

 private:
  Mould term(std::size_t n) const {
    std::lock_guard lock(mu_);
    while (terms_.size() <= n) terms_.push_back(term_(terms_.size(), terms_));
    return terms_[n];
  }

  std::function<Rat(std::size_t)> coeff_;
  Term term_;
  mutable std::mutex mu_;
  mutable std::vector<Mould> terms_;
};

}  // namespace flexionlab
