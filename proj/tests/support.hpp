#pragma once

// Shared helpers for the test binaries: seeded generators and brute-force
// oracles that share no code with the library.

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <tuple>
#include <vector>

#include "heronian/generate.hpp"

namespace testing {

using heronian::u64;

// Fixed seed per suite so failures reproduce.
inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(0x5eed1e5u);
  return gen;
}

inline u64 uniform(u64 lo, u64 hi) { return std::uniform_int_distribution<u64>(lo, hi)(rng()); }

inline u64 brute_isqrt(unsigned __int128 v) {
  u64 lo = 0, hi = u64{1} << 63;
  while (lo < hi) {
    const u64 mid = lo + (hi - lo + 1) / 2;
    if ((unsigned __int128)mid * mid <= v)
      lo = mid;
    else
      hi = mid - 1;
  }
  return lo;
}

inline bool brute_square(unsigned __int128 v) {
  const u64 r = brute_isqrt(v);
  return (unsigned __int128)r * r == v;
}

// Every Heronian (a >= b >= c) with a <= n by direct Heron product.
inline std::vector<std::tuple<u64, u64, u64>> brute_heronian(u64 n) {
  std::vector<std::tuple<u64, u64, u64>> out;
  for (u64 a = 1; a <= n; ++a)
    for (u64 b = 1; b <= a; ++b)
      for (u64 c = a - b + 1; c <= b; ++c) {
        const __int128 p = (__int128)(a + b + c) * (a + b - c) * (a - b + c) * (b + c - a);
        const u64 r = brute_isqrt((unsigned __int128)p);
        if ((__int128)r * r == p) out.emplace_back(a, b, c);
      }
  return out;
}

inline std::vector<std::tuple<u64, u64, u64>> sides(const heronian::Corpus& corpus) {
  std::vector<std::tuple<u64, u64, u64>> out;
  for (const auto& h : corpus) out.emplace_back(h.tri.a(), h.tri.b(), h.tri.c());
  return out;
}

}  // namespace testing
