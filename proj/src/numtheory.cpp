#include "heronian/numtheory.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>

#include "heronian/kernels.hpp"

namespace heronian {

std::string to_string(u128 v) {
  if (v == 0) return "0";
  std::string s;
  while (v != 0) {
    s.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  std::reverse(s.begin(), s.end());
  return s;
}

std::string to_string(i128 v) {
  if (v < 0) return "-" + to_string(static_cast<u128>(-(v + 1)) + 1);
  return to_string(static_cast<u128>(v));
}

std::optional<u128> parse_u128(std::string_view text) {
  if (text.empty()) return std::nullopt;
  u128 v = 0;
  for (char ch : text) {
    if (ch < '0' || ch > '9') return std::nullopt;
    if (!checked_mul(v, 10, v) || !checked_add(v, static_cast<u128>(ch - '0'), v))
      return std::nullopt;
  }
  return v;
}

u64 isqrt(u128 v) {
  if (v == 0) return 0;
  u128 r = static_cast<u128>(std::sqrt(static_cast<long double>(v)));
  constexpr u128 kMaxRoot = ~u64{0};
  if (r > kMaxRoot) r = kMaxRoot;
  while (r * r > v) --r;
  while (r < kMaxRoot && (r + 1) * (r + 1) <= v) ++r;
  return static_cast<u64>(r);
}

}  // namespace heronian

namespace heronian::nt {

// --- Factorization ----------------------------------------------------------

Factorization::Factorization(std::vector<PrimePower> factors) : factors_(std::move(factors)) {
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (factors_[i].prime < 2 || factors_[i].exponent == 0)
      throw std::invalid_argument("factorization entries need prime >= 2 and exponent >= 1");
    if (i > 0 && factors_[i - 1].prime >= factors_[i].prime)
      throw std::invalid_argument("factorization primes must be strictly increasing");
  }
}

u128 Factorization::value() const {
  u128 v = 1;
  for (const auto& [p, e] : factors_)
    for (u32 i = 0; i < e; ++i)
      if (!checked_mul(v, p, v)) throw std::overflow_error("factorization value exceeds 128 bits");
  return v;
}

u64 Factorization::divisor_count() const {
  u64 t = 1;
  for (const auto& pp : factors_) t *= pp.exponent + 1;
  return t;
}

bool Factorization::is_squarefree() const {
  return std::all_of(factors_.begin(), factors_.end(),
                     [](const PrimePower& pp) { return pp.exponent == 1; });
}

Factorization Factorization::squared() const {
  Factorization out = *this;
  for (auto& pp : out.factors_) pp.exponent *= 2;
  return out;
}

Factorization Factorization::operator*(const Factorization& other) const {
  Factorization out;
  out.factors_.reserve(factors_.size() + other.factors_.size());
  auto i = factors_.begin();
  auto j = other.factors_.begin();
  while (i != factors_.end() || j != other.factors_.end()) {
    if (j == other.factors_.end() || (i != factors_.end() && i->prime < j->prime)) {
      out.factors_.push_back(*i++);
    } else if (i == factors_.end() || j->prime < i->prime) {
      out.factors_.push_back(*j++);
    } else {
      out.factors_.push_back({i->prime, i->exponent + j->exponent});
      ++i;
      ++j;
    }
  }
  return out;
}

Factorization Factorization::quotient(const Factorization& divisor) const {
  Factorization out;
  auto j = divisor.factors_.begin();
  for (const auto& pp : factors_) {
    if (j != divisor.factors_.end() && j->prime < pp.prime)
      throw std::invalid_argument("quotient: not a divisor");
    u32 take = 0;
    if (j != divisor.factors_.end() && j->prime == pp.prime) take = (j++)->exponent;
    if (take > pp.exponent) throw std::invalid_argument("quotient: not a divisor");
    if (pp.exponent > take) out.factors_.push_back({pp.prime, pp.exponent - take});
  }
  if (j != divisor.factors_.end()) throw std::invalid_argument("quotient: not a divisor");
  return out;
}

// --- sieve ------------------------------------------------------------------

SpfTable::SpfTable(u64 limit) : limit_(limit) {
  if (limit < 2) throw std::invalid_argument("spf table needs limit >= 2");
  if (limit > u64{std::numeric_limits<u32>::max()})
    throw std::length_error("spf table limit exceeds 32-bit entries");
  spf_.assign(limit + 1, 0);
  for (u64 i = 2; i <= limit; ++i) {
    if (spf_[i] != 0) continue;
    spf_[i] = static_cast<u32>(i);
    if (i * i > limit) continue;
    for (u64 j = i * i; j <= limit; j += i)
      if (spf_[j] == 0) spf_[j] = static_cast<u32>(i);
  }
}

u32 SpfTable::smallest_factor(u64 m) const {
  if (m < 2 || m > limit_) throw std::out_of_range("spf lookup outside table");
  return spf_[m];
}

std::vector<u32> SpfTable::primes() const {
  std::vector<u32> out;
  for (u64 i = 2; i <= limit_; ++i)
    if (spf_[i] == i) out.push_back(static_cast<u32>(i));
  return out;
}

SpfTable build_spf(u64 limit) { return SpfTable(limit); }

Factorization factorize(u64 m, const SpfTable& table) {
  if (m == 0) throw std::out_of_range("factorize: zero has no factorization");
  if (m > table.limit()) throw std::out_of_range("factorize: value beyond sieve limit");
  std::vector<PrimePower> out;
  while (m > 1) {
    const u32 p = table.smallest_factor(m);
    u32 e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    out.push_back({p, e});
  }
  return Factorization(std::move(out));
}

Factorization factorize_trial(u128 m, std::span<const u32> primes) {
  if (m == 0) throw std::out_of_range("factorize: zero has no factorization");
  std::vector<PrimePower> out;
  for (u32 p : primes) {
    if (u128{p} * p > m) break;
    if (m % p != 0) continue;
    u32 e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    out.push_back({p, e});
  }
  if (m > 1) {
    if (!primes.empty() && m > u128{primes.back()} * primes.back())
      throw std::out_of_range("factorize_trial: prime list too short");
    if (m > std::numeric_limits<u64>::max())
      throw std::out_of_range("factorize_trial: cofactor exceeds 64 bits");
    out.push_back({static_cast<u64>(m), 1});
  }
  return Factorization(std::move(out));
}

Factorization factorize(u64 m) {
  if (m == 0) throw std::out_of_range("factorize: zero has no factorization");
  std::vector<PrimePower> out;
  for (u64 p = 2; p * p <= m; p += (p == 2 ? 1 : 2)) {
    if (m % p != 0) continue;
    u32 e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    out.push_back({p, e});
  }
  if (m > 1) out.push_back({m, 1});
  return Factorization(std::move(out));
}

// --- divisors ---------------------------------------------------------------

std::vector<u64> divisors(const Factorization& f, u64 bound) {
  std::vector<u64> out{1};
  if (bound == 0) return {};
  for (const auto& [p, e] : f.factors()) {
    const std::size_t base = out.size();
    for (std::size_t i = 0; i < base; ++i) {
      u64 d = out[i];
      for (u32 k = 0; k < e; ++k) {
        if (d > bound / p) break;
        d *= p;
        out.push_back(d);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<u64>> ordered_factorizations(u64 m, std::size_t k) {
  std::vector<std::vector<u64>> out;
  for_each_ordered_factorization(factorize(m), k, [&](std::span<const u64> parts) {
    out.emplace_back(parts.begin(), parts.end());
  });
  return out;
}

// --- sums of two squares ----------------------------------------------------

std::vector<std::pair<u64, u64>> sum_two_squares(u64 z) {
  std::vector<std::pair<u64, u64>> out;
  for (u64 x = 1; u128{x} * x < z; ++x) {
    const u128 rest = u128{z} - u128{x} * x;
    if (auto y = perfect_square_root(rest)) out.emplace_back(x, *y);
  }
  return out;
}

namespace {

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(u128{a} * b % m); }

u64 powmod(u64 base, u64 exp, u64 m) {
  u64 r = 1 % m;
  base %= m;
  while (exp != 0) {
    if (exp & 1) r = mulmod(r, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return r;
}

struct Gaussian {
  i128 re = 0;
  i128 im = 0;
};

Gaussian mul(Gaussian x, Gaussian y) {
  return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
}

// p = 1 mod 4 prime: returns (x, y) with x^2 + y^2 = p.
std::pair<u64, u64> two_square_prime(u64 p) {
  u64 root = 0;
  for (u64 c = 2;; ++c) {
    if (powmod(c, (p - 1) / 2, p) == p - 1) {
      root = powmod(c, (p - 1) / 4, p);
      break;
    }
  }
  // Hermite-Serret: Euclid on (p, root) until remainder < sqrt(p).
  u64 a = p;
  u64 b = root;
  const u64 limit = isqrt(p);
  while (b > limit) {
    const u64 r = a % b;
    a = b;
    b = r;
  }
  const u64 y = isqrt(u128{p} - u128{b} * b);
  return {b, y};
}

}  // namespace

bool is_sum_of_two_squares(const Factorization& z) {
  return std::all_of(z.factors().begin(), z.factors().end(), [](const PrimePower& pp) {
    return pp.prime % 4 != 3 || pp.exponent % 2 == 0;
  });
}

std::vector<std::pair<u64, u64>> sum_two_squares(const Factorization& z) {
  if (!is_sum_of_two_squares(z)) return {};
  // Gaussian integers of norm z: (1+i)^e2 * q^(e/2) * prod pi^k conj(pi)^(e-k).
  Gaussian fixed{1, 0};
  std::vector<std::pair<Gaussian, u32>> splits;
  for (const auto& [p, e] : z.factors()) {
    if (p == 2) {
      for (u32 i = 0; i < e; ++i) fixed = mul(fixed, {1, 1});
    } else if (p % 4 == 3) {
      for (u32 i = 0; i < e / 2; ++i) fixed = mul(fixed, {static_cast<i128>(p), 0});
    } else {
      const auto [x, y] = two_square_prime(p);
      splits.push_back({{static_cast<i128>(x), static_cast<i128>(y)}, e});
    }
  }
  std::vector<Gaussian> acc{fixed};
  for (const auto& [pi, e] : splits) {
    const Gaussian conj{pi.re, -pi.im};
    std::vector<Gaussian> next;
    next.reserve(acc.size() * (e + 1));
    for (const Gaussian& g : acc) {
      for (u32 k = 0; k <= e; ++k) {
        Gaussian h = g;
        for (u32 i = 0; i < k; ++i) h = mul(h, pi);
        for (u32 i = k; i < e; ++i) h = mul(h, conj);
        next.push_back(h);
      }
    }
    acc = std::move(next);
  }
  std::vector<std::pair<u64, u64>> out;
  for (Gaussian g : acc) {
    for (int unit = 0; unit < 4; ++unit) {
      if (g.re > 0 && g.im > 0) out.emplace_back(static_cast<u64>(g.re), static_cast<u64>(g.im));
      g = {-g.im, g.re};
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

u64 r2_count(const Factorization& z) {
  i64 balance = 0;
  for (u64 d : divisors(z)) {
    if (d % 4 == 1) ++balance;
    if (d % 4 == 3) --balance;
  }
  return static_cast<u64>(4 * balance);
}

u64 r2_count(u64 z) { return r2_count(factorize(z)); }

// --- squarefree parts -------------------------------------------------------

u64 squarefree_part(const Factorization& f) {
  u64 s = 1;
  for (const auto& pp : f.factors())
    if (pp.exponent % 2 == 1) s *= pp.prime;
  return s;
}

u64 squarefree_part(u64 f, const SpfTable& table) { return squarefree_part(factorize(f, table)); }

u128 combine_squarefree(u64 s1, u64 s2) {
  const u64 g = std::gcd(s1, s2);
  return u128{s1 / g} * (s2 / g);
}

SquarefreeTable::SquarefreeTable(u64 limit) {
  if (limit > u64{std::numeric_limits<u32>::max()})
    throw std::length_error("squarefree table limit exceeds 32-bit entries");
  sfp_.assign(limit + 1, 1);
  if (limit < 2) return;
  const SpfTable spf(limit);
  for (u64 m = 2; m <= limit; ++m) {
    const u32 p = spf.smallest_factor(m);
    const u64 rest = m / p;
    sfp_[m] = (rest % p == 0) ? sfp_[rest / p] : static_cast<u32>(sfp_[rest] * p);
  }
}

// --- perfect squares --------------------------------------------------------

namespace {

template <u32 M>
constexpr std::array<bool, M> squares_mod() {
  std::array<bool, M> t{};
  for (u32 x = 0; x < M; ++x) t[(x * x) % M] = true;
  return t;
}

constexpr auto kSq64 = squares_mod<64>();
constexpr auto kSq63 = squares_mod<63>();
constexpr auto kSq65 = squares_mod<65>();
constexpr auto kSq11 = squares_mod<11>();

}  // namespace

std::optional<u64> perfect_square_root(u128 v) {
  if (!kSq64[static_cast<u32>(v & 63)]) return std::nullopt;
  const u64 r = static_cast<u64>(v % (u64{63} * 65 * 11));
  if (!kSq63[r % 63] || !kSq65[r % 65] || !kSq11[r % 11]) return std::nullopt;
  const u64 root = isqrt(v);
  if (u128{root} * root != v) return std::nullopt;
  return root;
}

// --- mod 420 ----------------------------------------------------------------

Mod420Filter::Mod420Filter() {
  for (u32 x = 0; x < kModulus; ++x) square_[(x * x) % kModulus] = 1;
  bits_.assign(std::size_t{kModulus} * kModulus * kRowWords, 0);
  for (u32 a = 0; a < kModulus; ++a)
    for (u32 b = 0; b < kModulus; ++b)
      kernels::mod420_row(a, b, square_, bits_.data() + (a * kModulus + b) * kRowWords);
}

u64 Mod420Filter::accepted_count() const {
  u64 n = 0;
  for (u64 w : bits_) n += static_cast<u64>(std::popcount(w));
  return n;
}

const Mod420Filter& mod420_square_table() {
  static const Mod420Filter table;
  return table;
}

}  // namespace heronian::nt
