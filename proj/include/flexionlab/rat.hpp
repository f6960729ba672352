#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace flexionlab {

/// Raised by any exact division whose divisor is zero. Evaluation records the
/// innermost expression node and the word at which the division happened.
class DivByZero : public std::domain_error {
 public:
  DivByZero() : std::domain_error("division by zero") {}

  const std::string& where() const noexcept { return where_; }
  bool located() const noexcept { return !where_.empty(); }
  void locate(std::string where) { where_ = std::move(where); }

 private:
  std::string where_;
};

/// Exact rational number in lowest terms with a positive denominator.
class Rat {
 public:
  Rat() = default;
  Rat(long n) : q_(n) {}  // NOLINT(google-explicit-constructor)
  Rat(long n, long d) {
    if (d == 0) throw DivByZero();
    q_ = mpq_class(n, d);
    q_.canonicalize();
  }
  explicit Rat(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

  /// Parses "p", "p/q" or "-p/q". Throws std::invalid_argument on bad input.
  static Rat parse(std::string_view text) {
    mpq_class q;
    if (text.empty() || q.set_str(std::string(text), 10) != 0) {
      throw std::invalid_argument("not a rational: '" + std::string(text) + "'");
    }
    if (q.get_den() == 0) throw DivByZero();
    q.canonicalize();
    return Rat(std::move(q));
  }

  const mpq_class& raw() const noexcept { return q_; }
  bool is_zero() const noexcept { return sgn(q_) == 0; }
  bool is_one() const noexcept { return q_ == 1; }
  int sign() const noexcept { return sgn(q_); }
  Rat num() const { return Rat(mpq_class(q_.get_num())); }
  Rat den() const { return Rat(mpq_class(q_.get_den())); }

  /// Canonical text form: "p" for integers, "p/q" otherwise.
  std::string str() const { return q_.get_str(10); }

  std::size_t hash() const noexcept {
    // Mix the least significant limb and the size of numerator and denominator.
    const auto* num = q_.get_num_mpz_t();
    const auto* den = q_.get_den_mpz_t();
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    auto mix = [&h](std::uint64_t x) {
      h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    };
    mix(static_cast<std::uint64_t>(num->_mp_size));
    mix(num->_mp_size != 0 ? static_cast<std::uint64_t>(num->_mp_d[0]) : 0);
    mix(static_cast<std::uint64_t>(den->_mp_size));
    mix(static_cast<std::uint64_t>(den->_mp_d[0]));
    return static_cast<std::size_t>(h);
  }

  Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
  Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
  Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }
  Rat& operator/=(const Rat& o) {
    if (o.is_zero()) throw DivByZero();
    q_ /= o.q_;
    return *this;
  }

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
  friend Rat operator-(const Rat& a) { return Rat(mpq_class(-a.q_)); }

  friend bool operator==(const Rat& a, const Rat& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

 private:
  mpq_class q_{0};
};

inline Rat inverse(const Rat& r) { return Rat(1) / r; }

/// Exact binomial coefficient; zero when k < 0 or k > n (including n < 0).
inline Rat binom(long n, long k) {
  if (n < 0 || k < 0 || k > n) return Rat(0);
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rat(mpq_class(out));
}

inline Rat factorial(long n) {
  mpz_class out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return Rat(mpq_class(out));
}

}  // namespace flexionlab
