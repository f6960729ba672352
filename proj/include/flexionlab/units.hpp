#pragma once

#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "flexionlab/rat.hpp"
#include "flexionlab/word.hpp"

namespace flexionlab {

/// A flexion unit E together with its conjugate O.
struct FlexionUnit {
  std::string name;
  std::function<Rat(const Biletter&)> E;
  std::function<Rat(const Biletter&)> O;
};

inline FlexionUnit unit_polar() {
  return {"polar", [](const Biletter& l) { return inverse(l.u); }, [](const Biletter& l) { return inverse(l.v); }};
}

inline FlexionUnit unit_conjugate(const FlexionUnit& u) {
  static const std::string suffix = "-conjugate";
  std::string name = u.name;
  if (name.size() > suffix.size() && name.ends_with(suffix)) {
    name.resize(name.size() - suffix.size());
  } else {
    name += suffix;
  }
  return {std::move(name), u.O, u.E};
}

/// E(w1)E(w2) = E(u1+u2;v1)E(u2;v2-v1) + E(u1+u2;v2)E(u1;v1-v2), as lhs - rhs.
inline Rat tripartite_defect(const std::function<Rat(const Biletter&)>& e, const Biletter& a, const Biletter& b) {
  const Rat s = a.u + b.u;
  const Rat lhs = e(a) * e(b);
  const Rat rhs = e({s, a.v}) * e({b.u, b.v - a.v}) + e({s, b.v}) * e({a.u, a.v - b.v});
  return lhs - rhs;
}

/// Samples random letter pairs and returns the first pair violating the
/// tripartite relation, or nothing when all samples pass.
inline std::optional<std::pair<Biletter, Biletter>> find_tripartite_violation(const FlexionUnit& u, int samples,
                                                                             std::uint64_t seed = 0) {
  std::mt19937_64 rng(mix64(seed ^ hash_name(u.name)));
  int done = 0;
  for (int attempt = 0; done < samples && attempt < samples * 16; ++attempt) {
    const Biletter a = sample_letter(rng), b = sample_letter(rng);
    try {
      if (!tripartite_defect(u.E, a, b).is_zero()) return std::make_pair(a, b);
      ++done;
    } catch (const DivByZero&) {
      // singular sample point; draw another
    }
  }
  return std::nullopt;
}

/// Named units available to the CLI. Registration runs the tripartite check.
class UnitRegistry {
 public:
  static UnitRegistry& instance() {
    static UnitRegistry reg;
    return reg;
  }

  void add(FlexionUnit u, int samples = 64) {
    if (auto bad = find_tripartite_violation(u, samples)) {
      throw std::invalid_argument("unit '" + u.name + "' violates the tripartite relation at " +
                                  to_string(bad->first) + ", " + to_string(bad->second));
    }
    std::lock_guard lock(mu_);
    units_[u.name] = std::move(u);
  }

  const FlexionUnit& get(const std::string& name) const {
    std::lock_guard lock(mu_);
    auto it = units_.find(name);
    if (it == units_.end()) throw std::out_of_range("unknown flexion unit '" + name + "'");
    return it->second;
  }

  std::vector<std::string> names() const {
    std::lock_guard lock(mu_);
    std::vector<std::string> out;
    for (const auto& [k, _] : units_) out.push_back(k);
    return out;
  }

 private:
  UnitRegistry() {
    add(unit_polar());
    add(unit_conjugate(unit_polar()));
  }

  mutable std::mutex mu_;
  std::map<std::string, FlexionUnit> units_;
};

}  // namespace flexionlab
