#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "flexionlab/rat.hpp"

namespace flexionlab {

struct Biletter {
  Rat u;
  Rat v;

  friend bool operator==(const Biletter&, const Biletter&) = default;
};

using Word = std::vector<Biletter>;
using WordView = std::span<const Biletter>;

inline Word to_word(WordView w) { return Word(w.begin(), w.end()); }

inline Word concat(WordView a, WordView b) {
  Word out;
  out.reserve(a.size() + b.size());
  out.insert(out.end(), a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept {
    std::size_t h = w.size() * 0x100000001b3ULL;
    for (const auto& l : w) {
      h ^= l.u.hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
      h ^= l.v.hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

inline Rat sum_u(WordView w) {
  Rat s;
  for (const auto& l : w) s += l.u;
  return s;
}

// ---------------------------------------------------------------------------
// Flexions. Naming: ful(a,b) = b with a absorbed from the left on the upper row,
// flr(a,b) = a translated by the first lower entry of b, and so on.

enum class Flexion { ful, fur, fll, flr };

inline Word ful(WordView a, WordView b) {
  Word out = to_word(b);
  if (a.empty() || b.empty()) return out;
  out.front().u += sum_u(a);
  return out;
}

inline Word fur(WordView a, WordView b) {
  Word out = to_word(a);
  if (b.empty() || a.empty()) return out;
  out.back().u += sum_u(b);
  return out;
}

inline Word fll(WordView a, WordView b) {
  Word out = to_word(b);
  if (a.empty() || b.empty()) return out;
  const Rat& shift = a.back().v;
  for (auto& l : out) l.v -= shift;
  return out;
}

inline Word flr(WordView a, WordView b) {
  Word out = to_word(a);
  if (b.empty() || a.empty()) return out;
  const Rat& shift = b.front().v;
  for (auto& l : out) l.v -= shift;
  return out;
}

inline Word flexion(Flexion kind, WordView a, WordView b) {
  switch (kind) {
    case Flexion::ful: return ful(a, b);
    case Flexion::fur: return fur(a, b);
    case Flexion::fll: return fll(a, b);
    case Flexion::flr: return flr(a, b);
  }
  return {};
}

// ---------------------------------------------------------------------------
// Pullbacks on words.

inline Word reverse(WordView w) { return Word(w.rbegin(), w.rend()); }

inline Word negate(WordView w) {
  Word out;
  out.reserve(w.size());
  for (const auto& l : w) out.push_back({-l.u, -l.v});
  return out;
}

/// sigma(w): k-th letter is (v_{r-k+1} - v_{r-k+2}; u_1 + ... + u_{r-k+1}), v_{r+1} = 0.
inline Word swap_pullback(WordView w) {
  const std::size_t r = w.size();
  std::vector<Rat> prefix(r + 1);
  for (std::size_t i = 0; i < r; ++i) prefix[i + 1] = prefix[i] + w[i].u;
  Word out;
  out.reserve(r);
  for (std::size_t k = 1; k <= r; ++k) {
    const std::size_t j = r - k;  // zero-based index of v_{r-k+1}
    Rat top = w[j].v;
    if (j + 1 < r) top -= w[j + 1].v;
    out.push_back({std::move(top), prefix[j + 1]});
  }
  return out;
}

enum class Transform { reverse, negate, swap };

inline Word word_transform(Transform kind, WordView w) {
  switch (kind) {
    case Transform::reverse: return reverse(w);
    case Transform::negate: return negate(w);
    case Transform::swap: return swap_pullback(w);
  }
  return {};
}

// ---------------------------------------------------------------------------
// Shuffles.

/// Calls fn(word) for every interleaving of a and b, with multiplicity.
template <class Fn>
void for_each_shuffle(WordView a, WordView b, Fn&& fn) {
  Word cur;
  cur.reserve(a.size() + b.size());
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t j) {
    if (i == a.size() && j == b.size()) {
      fn(static_cast<const Word&>(cur));
      return;
    }
    if (i < a.size()) {
      cur.push_back(a[i]);
      rec(i + 1, j);
      cur.pop_back();
    }
    if (j < b.size()) {
      cur.push_back(b[j]);
      rec(i, j + 1);
      cur.pop_back();
    }
  };
  rec(0, 0);
}

inline std::vector<Word> shuffles(WordView a, WordView b) {
  std::vector<Word> out;
  for_each_shuffle(a, b, [&](const Word& w) { out.push_back(w); });
  return out;
}

// ---------------------------------------------------------------------------
// Sampling.

struct Bounds {
  long P = 100;  // numerators in [-P, P] \ {0}
  long Q = 20;   // denominators in [1, Q]
};

/// Deterministic 64-bit mixer (splitmix64 finalizer).
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t hash_name(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;  // FNV-1a
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

// The std distributions are implementation-defined, so the mapping from engine
// output to integers is done by hand to keep words identical across platforms.
inline Rat sample_rat(std::mt19937_64& rng, const Bounds& b) {
  const auto span = static_cast<std::uint64_t>(2 * b.P);
  auto k = static_cast<long>(rng() % span);  // 0 .. 2P-1
  const long p = k < b.P ? k - b.P : k - b.P + 1;
  const long q = 1 + static_cast<long>(rng() % static_cast<std::uint64_t>(b.Q));
  return Rat(p, q);
}

inline Word sample_word(std::mt19937_64& rng, std::size_t r, const Bounds& b = {}) {
  Word out;
  out.reserve(r);
  for (std::size_t i = 0; i < r; ++i) {
    Rat u = sample_rat(rng, b);
    Rat v = sample_rat(rng, b);
    out.push_back({std::move(u), std::move(v)});
  }
  return out;
}

inline Word sample_word(std::uint64_t seed, std::size_t r, const Bounds& b = {}) {
  std::mt19937_64 rng(seed);
  return sample_word(rng, r, b);
}

inline Biletter sample_letter(std::mt19937_64& rng, const Bounds& b = {}) {
  return sample_word(rng, 1, b).front();
}

// ---------------------------------------------------------------------------
// Text forms.

inline std::string to_string(const Biletter& l) { return "(" + l.u.str() + ";" + l.v.str() + ")"; }

inline std::string to_string(WordView w) {
  if (w.empty()) return "()";
  std::string s = "[";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ",";
    s += to_string(w[i]);
  }
  return s + "]";
}

}  // namespace flexionlab
