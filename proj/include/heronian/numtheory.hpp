#pragma once

// Exact integer primitives: sieve, factorization, divisor enumeration,
// sums of two squares, squarefree parts and perfect-square testing.

#include <array>
#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "heronian/wide.hpp"

namespace heronian::nt {

struct PrimePower {
  u64 prime = 0;
  u32 exponent = 0;
  bool operator==(const PrimePower&) const = default;
};

// Prime-exponent list with strictly increasing primes. Empty means 1.
class Factorization {
 public:
  Factorization() = default;
  explicit Factorization(std::vector<PrimePower> factors);

  const std::vector<PrimePower>& factors() const { return factors_; }
  bool is_one() const { return factors_.empty(); }

  u128 value() const;
  // tau(m) = prod(e_i + 1)
  u64 divisor_count() const;
  bool is_squarefree() const;

  Factorization squared() const;
  Factorization operator*(const Factorization& other) const;
  // Throws std::invalid_argument unless `divisor` divides *this.
  Factorization quotient(const Factorization& divisor) const;

  bool operator==(const Factorization&) const = default;

 private:
  std::vector<PrimePower> factors_;
};

// Smallest-prime-factor table for 2 <= m <= limit.
class SpfTable {
 public:
  explicit SpfTable(u64 limit);

  u64 limit() const { return limit_; }
  u32 smallest_factor(u64 m) const;
  bool is_prime(u64 m) const { return m >= 2 && smallest_factor(m) == m; }
  std::vector<u32> primes() const;

 private:
  u64 limit_;
  std::vector<u32> spf_;
};

SpfTable build_spf(u64 limit);

// Throws std::out_of_range when m > table.limit() or m == 0.
Factorization factorize(u64 m, const SpfTable& table);
// Trial division; `primes` must contain every prime up to sqrt(m).
Factorization factorize_trial(u128 m, std::span<const u32> primes);
// Self-contained trial division for moderate m.
Factorization factorize(u64 m);

// Sorted divisors. Divisors above `bound` are skipped during generation.
std::vector<u64> divisors(const Factorization& f, u64 bound = std::numeric_limits<u64>::max());

// Calls fn(std::span<const u64>) once per ordered k-tuple of positive
// integers whose product is f.value(). Requires f.value() < 2^64.
template <class Fn>
void for_each_ordered_factorization(const Factorization& f, std::size_t k, Fn&& fn);

std::vector<std::vector<u64>> ordered_factorizations(u64 m, std::size_t k);

// Ordered pairs (x, y), x, y >= 1, x^2 + y^2 = z, sorted by x.
// Reference route: trial roots over x.
std::vector<std::pair<u64, u64>> sum_two_squares(u64 z);
// Gaussian-integer route from the factorization of z.
std::vector<std::pair<u64, u64>> sum_two_squares(const Factorization& z);
// True iff z is a sum of two squares (zeros allowed).
bool is_sum_of_two_squares(const Factorization& z);

// Number of integer pairs (x, y), signs and zeros included, with x^2+y^2 = z:
// 4 * (#divisors = 1 mod 4 - #divisors = 3 mod 4).
u64 r2_count(u64 z);
u64 r2_count(const Factorization& z);

u64 squarefree_part(u64 f, const SpfTable& table);
u64 squarefree_part(const Factorization& f);
// sfp(f1 f2) from sfp(f1), sfp(f2): s1 s2 / gcd(s1, s2)^2.
u128 combine_squarefree(u64 s1, u64 s2);

// sfp(m) for every 0 <= m <= limit (entry 0 unused).
class SquarefreeTable {
 public:
  explicit SquarefreeTable(u64 limit);
  u64 limit() const { return sfp_.size() - 1; }
  u32 operator[](u64 m) const { return sfp_[m]; }
  const u32* data() const { return sfp_.data(); }

 private:
  std::vector<u32> sfp_;
};

// Root when v is a perfect square.
std::optional<u64> perfect_square_root(u128 v);
inline bool is_perfect_square(u128 v) { return perfect_square_root(v).has_value(); }

// Residue screen modulo 420 for the Heron product of a side triple.
class Mod420Filter {
 public:
  static constexpr u32 kModulus = 420;
  static constexpr std::size_t kRowWords = 7;  // 420 bits padded to 448

  Mod420Filter();

  bool square_residue(u64 r) const { return square_[r % kModulus] != 0; }
  bool accepts(u64 a, u64 b, u64 c) const {
    const u64* r = row(a, b);
    const u64 cr = c % kModulus;
    return (r[cr >> 6] >> (cr & 63)) & 1u;
  }
  // 420 bits; bit c set iff (a, b, c) passes.
  const u64* row(u64 a, u64 b) const {
    return bits_.data() + ((a % kModulus) * kModulus + (b % kModulus)) * kRowWords;
  }
  // Accepted triples over Z_420^3.
  u64 accepted_count() const;
  static constexpr u64 total_count() { return u64{kModulus} * kModulus * kModulus; }

  const std::array<u32, kModulus>& square_residues() const { return square_; }

 private:
  std::array<u32, kModulus> square_{};
  std::vector<u64> bits_;
};

const Mod420Filter& mod420_square_table();

// ---------------------------------------------------------------------------

namespace detail {

template <class Fn>
void ordered_rec(const std::vector<PrimePower>& pf, std::vector<u32>& remaining,
                 std::vector<u64>& parts, std::size_t slot, Fn& fn) {
  const std::size_t k = parts.size();
  if (slot + 1 == k) {
    u64 last = 1;
    for (std::size_t i = 0; i < pf.size(); ++i)
      for (u32 e = 0; e < remaining[i]; ++e) last *= pf[i].prime;
    parts[slot] = last;
    fn(std::span<const u64>(parts));
    return;
  }
  // Odometer over exponent vectors bounded by `remaining`.
  std::vector<u32> take(pf.size(), 0);
  u64 value = 1;
  for (;;) {
    parts[slot] = value;
    for (std::size_t i = 0; i < pf.size(); ++i) remaining[i] -= take[i];
    ordered_rec(pf, remaining, parts, slot + 1, fn);
    for (std::size_t i = 0; i < pf.size(); ++i) remaining[i] += take[i];

    std::size_t i = 0;
    for (; i < pf.size(); ++i) {
      if (take[i] < remaining[i]) {
        ++take[i];
        value *= pf[i].prime;
        break;
      }
      for (u32 e = 0; e < take[i]; ++e) value /= pf[i].prime;
      take[i] = 0;
    }
    if (i == pf.size()) return;
  }
}

}  // namespace detail

template <class Fn>
void for_each_ordered_factorization(const Factorization& f, std::size_t k, Fn&& fn) {
  if (k == 0) throw std::invalid_argument("ordered factorization needs k >= 1");
  std::vector<u32> remaining;
  remaining.reserve(f.factors().size());
  for (const auto& pp : f.factors()) remaining.push_back(pp.exponent);
  std::vector<u64> parts(k, 1);
  detail::ordered_rec(f.factors(), remaining, parts, 0, fn);
}

}  // namespace heronian::nt
