#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "flexionlab/mould.hpp"
#include "flexionlab/rat.hpp"

namespace flexionlab {

/// The quadruple sum F^r_{k,l,h}, summed term by term.
inline Rat negelon_F(long r, long k, long l, long h) {
  Rat total;
  for (long s = 1; s <= r; ++s) {
    for (long j = 1; j <= s; ++j) {
      Rat inner;
      for (long c = 0; c <= j - 1; ++c) {
        for (long d = 0; d <= s - j; ++d) {
          Rat t = binom(j - 1, c) * binom(s - j, d) * binom(c, k) * binom(d + 1, l) * binom(c + d + 1, h);
          if ((c + d) % 2) t = -t;
          inner += t;
        }
      }
      total += Rat(s + 1 - j, s * (s + 1)) * inner;
    }
  }
  return total;
}

struct NegelonTuple {
  long r, k, l, h;
  Rat value;
};

/// Every (r,k,l,h) with 2 <= r <= r_max, k,l >= 0, h >= h_min and k+l+h <= r-1.
inline std::vector<NegelonTuple> negelon_scan(long r_max, long h_min = 1) {
  std::vector<NegelonTuple> out;
  for (long r = 2; r <= r_max; ++r)
    for (long h = h_min; h <= r - 1; ++h)
      for (long k = 0; k + h <= r - 1; ++k)
        for (long l = 0; k + l + h <= r - 1; ++l) out.push_back({r, k, l, h, negelon_F(r, k, l, h)});
  return out;
}

// Auxiliary identities used when the sum is collapsed by hand. Each returns lhs - rhs.

inline Rat vandermonde_defect(long s, long c, long d) {
  Rat lhs;
  for (long j = c + 1; j <= s - d; ++j) lhs += Rat(s + 1 - j) * binom(j - 1, c) * binom(s - j, d);
  return lhs - Rat(d + 1) * binom(s + 1, c + d + 2);
}

inline Rat convolution_defect(long n, long k, long l) {
  Rat lhs;
  for (long d = 0; d <= n; ++d) lhs += Rat(d + 1) * binom(d + 1, l) * binom(n - d, k);
  return lhs - (Rat(l) * binom(n + 2, k + l + 1) + Rat(l + 1) * binom(n + 2, k + l + 2));
}

inline Rat finite_difference(long N, long d) {
  Rat s;
  for (long n = 1; n <= N; ++n) {
    Rat p(1);
    for (long e = 0; e < d; ++e) p *= Rat(n);
    Rat t = binom(N, n) * p;
    s += n % 2 ? -t : t;
  }
  return s;
}

struct AuxFailure {
  std::string identity;
  std::vector<long> args;
  Rat defect;
};

/// Runs all three auxiliary identities over every index tuple bounded by n_max.
/// Returns the number of tuples checked and collects failures.
inline std::size_t aux_identities(long n_max, std::vector<AuxFailure>& failures) {
  std::size_t count = 0;
  for (long s = 0; s <= n_max; ++s)
    for (long c = 0; c <= n_max; ++c)
      for (long d = 0; c + d + 1 <= s; ++d) {
        ++count;
        if (Rat x = vandermonde_defect(s, c, d); !x.is_zero()) failures.push_back({"vandermonde", {s, c, d}, x});
      }
  for (long n = 0; n <= n_max; ++n)
    for (long k = 0; k <= n_max; ++k)
      for (long l = 0; l <= n_max; ++l) {
        ++count;
        if (Rat x = convolution_defect(n, k, l); !x.is_zero()) failures.push_back({"convolution", {n, k, l}, x});
      }
  for (long N = 2; N <= n_max; ++N)
    for (long d = 1; d < N; ++d) {
      ++count;
      if (Rat x = finite_difference(N, d); !x.is_zero()) failures.push_back({"finite-difference", {N, d}, x});
    }
  return count;
}

/// mu(A, ..., A) with n factors; n = 0 gives the unit.
inline Mould mu_power(const Mould& a, std::size_t n) {
  Mould out = one();
  for (std::size_t i = 0; i < n; ++i) out = i == 0 ? a : mu(out, a);
  return out;
}

/// Right side of the mu-power expansion, truncated at max_length (terms with i > length vanish).
inline Mould mu_factor_rhs(const Mould& s, std::size_t n, std::size_t max_length) {
  const Mould t = s - one();
  LinCombNode::Terms terms;
  for (std::size_t i = 0; i <= max_length && i <= n; ++i)
    terms.push_back({binom(static_cast<long>(n), static_cast<long>(i)), mu_power(t, i)});
  return lincomb(std::move(terms), "mu_factor(" + ref(s) + ")");
}

}  // namespace flexionlab
