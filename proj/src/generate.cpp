#include "heronian/generate.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <sstream>

#include "heronian/kernels.hpp"
#include "heronian/numtheory.hpp"

namespace heronian {

std::string_view algorithm_name(Algorithm alg) {
  switch (alg) {
    case Algorithm::I:
      return "i";
    case Algorithm::II:
      return "ii";
    case Algorithm::III:
      return "iii";
  }
  return "?";
}

std::optional<Algorithm> parse_algorithm(std::string_view text) {
  if (text == "i" || text == "I" || text == "1") return Algorithm::I;
  if (text == "ii" || text == "II" || text == "2") return Algorithm::II;
  if (text == "iii" || text == "III" || text == "3") return Algorithm::III;
  return std::nullopt;
}

namespace {

u64 max_quad_area(u64 n) { return isqrt(u128{3} * n * n * n * n); }

LoopRange clip(std::optional<LoopRange> range, LoopRange full) {
  if (!range) return full;
  return {std::max(range->first, full.first), std::min(range->last, full.last)};
}

// Canonical triples -> corpus, attaching 4A. Input may contain duplicates.
Corpus finish(std::vector<Triangle> tris) {
  std::sort(tris.begin(), tris.end());
  tris.erase(std::unique(tris.begin(), tris.end()), tris.end());
  Corpus out;
  out.reserve(tris.size());
  for (const Triangle& t : tris) {
    auto h = as_heronian(t.a(), t.b(), t.c());
    if (!h) throw std::logic_error("generator emitted a non-Heronian triple");
    out.push_back(*h);
  }
  return out;
}

// Ordered triples (x1, x2, x3) with product x, for every x <= limit,
// optionally requiring a squarefree middle entry. Each x's entries are
// sorted by a monomial key in (x1, x2) so loops can clip them by bounds.
class TripleTable {
 public:
  struct Entry {
    u32 first, middle, last;
    u64 key;
  };
  enum class Key { FirstTimesMiddleSquared, FirstSquaredTimesMiddle };

  TripleTable(u64 limit, const nt::SpfTable& spf, bool squarefree_middle, Key key) {
    offsets_.assign(limit + 2, 0);
    for (u64 x = 1; x <= limit; ++x) {
      offsets_[x] = data_.size();
      const nt::Factorization f = nt::factorize(x, spf);
      nt::for_each_ordered_factorization(f, 3, [&](std::span<const u64> t) {
        if (squarefree_middle && !is_squarefree(t[1], spf)) return;
        const u64 k = key == Key::FirstTimesMiddleSquared ? t[0] * t[1] * t[1] : t[0] * t[0] * t[1];
        data_.push_back({static_cast<u32>(t[0]), static_cast<u32>(t[1]), static_cast<u32>(t[2]), k});
      });
      std::sort(data_.begin() + static_cast<std::ptrdiff_t>(offsets_[x]), data_.end(),
                [](const Entry& l, const Entry& r) { return l.key < r.key; });
    }
    offsets_[limit + 1] = data_.size();
  }

  // First entry of x with key >= lo.
  const Entry* from(u64 x, u128 lo) const {
    const Entry* it = data_.data() + offsets_[x];
    const Entry* last = end(x);
    while (it != last && it->key < lo) ++it;
    return it;
  }
  const Entry* end(u64 x) const { return data_.data() + offsets_[x + 1]; }

 private:
  static bool is_squarefree(u64 v, const nt::SpfTable& spf) {
    while (v > 1) {
      const u32 p = spf.smallest_factor(v);
      v /= p;
      if (v % p == 0) return false;
    }
    return true;
  }

  std::vector<std::size_t> offsets_;
  std::vector<Entry> data_;
};

u128 ceil_div(u128 x, u128 y) { return x / y + (x % y != 0); }

bool admissible_w4(const nt::Factorization& f) {
  for (const nt::PrimePower& pp : f.factors()) {
    if (pp.prime == 2 ? pp.exponent > 1 : pp.prime % 4 != 1) return false;
  }
  return true;
}

}  // namespace

LoopRange outer_range(Algorithm alg, u64 n) {
  if (alg == Algorithm::II) return {1, max_quad_area(n)};
  return {1, n};
}

LoopRange shard_range(LoopRange full, u64 count, u64 index) {
  if (count == 0 || index >= count) throw std::invalid_argument("shard index out of range");
  if (full.last < full.first) return {1, 0};
  const u128 span = u128{full.last} - full.first + 1;
  const u64 lo = full.first + static_cast<u64>(span * index / count);
  const u64 hi = full.first + static_cast<u64>(span * (index + 1) / count);
  return {lo, hi - 1};
}

// ---------------------------------------------------------------------------
// Algorithm I

Corpus generate_algorithm_i(u64 n, std::optional<LoopRange> range, const ParamObserver& observer) {
  if (n < 1) return {};
  const LoopRange r = clip(range, outer_range(Algorithm::I, n));
  if (r.last < r.first) return {};

  const nt::SpfTable spf(std::max<u64>(2, 16 * n));
  // x = beta w1 v and y = gamma s t are at most sqrt(a w4) <= 4n.
  const TripleTable xs(4 * n, spf, false, TripleTable::Key::FirstTimesMiddleSquared);
  const TripleTable ys(4 * n, spf, true, TripleTable::Key::FirstSquaredTimesMiddle);

  std::vector<Triangle> found;
  for (u64 a = r.first; a <= r.last; ++a) {
    const nt::Factorization fa = nt::factorize(a, spf);
    const std::vector<u64> a_divisors = nt::divisors(fa);
    // w4 | 8c, and w4 has at most one factor 2 (below), so w4 | 2c with
    // c <= min(n, 2a - 1).
    const u64 w4_max = std::min(16 * a, 2 * std::min(n, 2 * a - 1));
    for (u64 w4 = 1; w4 <= w4_max; ++w4) {
      // w4 divides x^2 + y^2 with x, y prime to w4: only 2 (once) and
      // primes 1 mod 4 can occur.
      const nt::Factorization fw = nt::factorize(w4, spf);
      if (!admissible_w4(fw)) continue;
      const u64 big_n = a * w4;

      // p alpha u is prime to w4 and divides a w4, so it divides a and
      // z = e w4 with e = a / (p alpha u).
      for (u64 e : a_divisors) {
        const nt::Factorization fe = nt::factorize(e, spf);
        const nt::Factorization fz = fe * fw;
        if (!nt::is_sum_of_two_squares(fz)) continue;
        const u64 z = e * w4;
        if (z < 2) continue;
        std::vector<std::pair<u64, u64>> reps = nt::sum_two_squares(fz);
        std::erase_if(reps, [&](const auto& xy) {
          return std::gcd(xy.first, w4) != 1 || std::gcd(xy.second, w4) != 1;
        });
        if (reps.empty()) continue;
        const nt::Factorization rest = fa.quotient(fe);
        const u64 rest_value = a / e;
        // u: squarefree divisor of the rest; then p * alpha = rest / u.
        const auto& rp = rest.factors();
        for (u64 mask = 0; mask < (u64{1} << rp.size()); ++mask) {
          u64 u = 1;
          std::vector<nt::PrimePower> pa_factors;
          for (std::size_t k = 0; k < rp.size(); ++k) {
            const u32 ex = rp[k].exponent - (mask >> k & 1);
            if (mask >> k & 1) u *= rp[k].prime;
            if (ex > 0) pa_factors.push_back({rp[k].prime, ex});
          }
          if (std::gcd(u, w4) != 1) continue;
          const u64 pa = rest_value / u;
          for (u64 p : nt::divisors(nt::Factorization(std::move(pa_factors)))) {
            const u64 alpha = pa / p;
            // gcd(p, q) = 1, gcd(w4, h) = 1.
            if (std::gcd(p * alpha, w4) != 1 || std::gcd(p, u) != 1) continue;
            // b w4 >= p (alpha^2 + u^2) and b <= a.
            if (u128{p} * (u128{alpha} * alpha + u128{u} * u) > big_n) continue;
            for (const auto& [x, y] : reps) {
              // With k = beta w1^2: b w4 >= p beta (alpha w1)^2 s t^2 gives
              // k <= N / (p alpha^2); b w4 >= p beta s (gamma u v)^2 gives
              // k >= p u^2 x^2 / N; c > 0 needs alpha k > gamma^2 s u >= u.
              const u128 k_hi = u128{big_n} / (u128{p} * alpha * alpha);
              const u128 k_lo = std::max(ceil_div(u128{p} * u * u * x * x, big_n), u128{u / alpha + 1});
              for (const auto* bx = xs.from(x, k_lo); bx != xs.end(x) && bx->key <= k_hi; ++bx) {
                const u64 beta = bx->first, w1 = bx->middle, v = bx->last;
                const u64 uv = u * v;
                // w1 and w3 coprime to each other and to p; gcd(h, i, j) = 1
                // needs alpha prime to u v.
                if (std::gcd(w1 * v, p) != 1 || std::gcd(w1, uv) != 1 || std::gcd(uv, alpha) != 1)
                  continue;
                const u128 pb = u128{p} * beta;
                const u64 aw1 = alpha * w1;
                // Primes that s t must avoid.
                const u64 avoid = p * x * u;
                // With g = gamma^2 s: s t^2 = y^2 / g, so b w4 >= p beta (alpha w1)^2 y^2 / g
                // bounds g below, and c > 0 bounds g u below beta alpha w1^2.
                const u128 g_lo = ceil_div(pb * aw1 * aw1 * y * y, big_n);
                const u128 g_hi = (u128{beta} * alpha * w1 * w1 - 1) / u;
                for (const auto* gy = ys.from(y, g_lo); gy != ys.end(y) && gy->key <= g_hi; ++gy) {
                  const u64 gamma = gy->first, s = gy->middle, t = gy->last;
                  // Both squares are at most b w4 <= N, so u64 suffices below.
                  const u64 aw1t = aw1 * t;
                  const u64 guv = uv * gamma;
                  if (pb * s * (u128{aw1t} * aw1t + u128{guv} * guv) > big_n) continue;
                  // b integral: w4 | (alpha w1 t)^2 + (gamma u v)^2.
                  if (w4 > 1 && (aw1t * aw1t + guv * guv) % w4 != 0) continue;
                  // w2 = s t^2 coprime to p, w1, w3, beta; gcd(h, i, j) = 1.
                  if (std::gcd(s * t, avoid) != 1 || std::gcd(w1, gamma) != 1) continue;
                  const ParamTuple pt{p, w1, w4, s, t, u, v, alpha, beta, gamma};
                  const ParamResult res = param_triangle(pt);
                  if (!res.ok() || res.b > res.a || res.c > n) continue;
                  if (observer) observer(pt, res);
                  found.push_back(Triangle::canonical(res.a, res.b, res.c));
                }
              }
            }
          }
        }
      }
    }
    // Keep the duplicate-laden buffer bounded.
    if (found.size() > (1u << 22)) {
      std::sort(found.begin(), found.end());
      found.erase(std::unique(found.begin(), found.end()), found.end());
    }
  }
  return finish(std::move(found));
}

// ---------------------------------------------------------------------------
// Algorithm II

namespace {

// Factorizations of consecutive integers by a segmented sieve.
class SegmentedFactorizer {
 public:
  explicit SegmentedFactorizer(u64 max_value)
      : primes_(nt::SpfTable(std::max<u64>(2, isqrt(max_value) + 1)).primes()) {}

  // Calls fn(m, Factorization) for m in [lo, hi].
  template <class Fn>
  void run(u64 lo, u64 hi, Fn&& fn) {
    constexpr u64 kBlock = u64{1} << 15;
    std::vector<u64> residual;
    std::vector<std::vector<nt::PrimePower>> facts;
    for (u64 start = lo; start <= hi; start += kBlock) {
      const u64 stop = std::min(hi, start + kBlock - 1);
      const u64 len = stop - start + 1;
      residual.resize(len);
      facts.assign(len, {});
      for (u64 k = 0; k < len; ++k) residual[k] = start + k;
      for (u32 p : primes_) {
        if (u64{p} * p > stop) break;
        for (u64 m = (start + p - 1) / p * p; m <= stop; m += p) {
          u64& rest = residual[m - start];
          u32 e = 0;
          while (rest % p == 0) {
            rest /= p;
            ++e;
          }
          facts[m - start].push_back({p, e});
        }
      }
      for (u64 k = 0; k < len; ++k) {
        if (residual[k] > 1) facts[k].push_back({residual[k], 1});
        fn(start + k, nt::Factorization(std::move(facts[k])));
      }
      if (stop == hi) break;
    }
  }

 private:
  std::vector<u32> primes_;
};

}  // namespace

Corpus generate_algorithm_ii(u64 n, std::optional<LoopRange> range) {
  if (n < 1) return {};
  const LoopRange r = clip(range, outer_range(Algorithm::II, n));
  if (r.last < r.first) return {};

  std::vector<Triangle> found;
  SegmentedFactorizer factorizer(r.last);
  factorizer.run(r.first, r.last, [&](u64 m, const nt::Factorization& fm) {
    const u128 m2 = u128{m} * m;
    // f2 = p + c <= 2n + n.
    const std::vector<u64> ds = nt::divisors(fm.squared(), 3 * n);
    for (std::size_t i = 0; i < ds.size(); ++i) {
      const u64 f1 = ds[i];
      for (std::size_t j = i + 1; j < ds.size(); ++j) {
        const u64 f2 = ds[j];
        if ((f1 ^ f2) & 1) continue;
        const u128 x = u128{f1} * f2;
        if (m2 % x != 0) continue;
        const u64 c = (f2 - f1) / 2;
        const u64 p = (f1 + f2) / 2;
        if (c > n || p > 2 * n) continue;
        // (c - q)(c + q) = m^2 / (f1 f2) fixes q.
        const u128 y = m2 / x;
        const u128 c2 = u128{c} * c;
        if (y > c2) continue;
        const auto q = nt::perfect_square_root(c2 - y);
        if (!q || *q >= c || ((p + *q) & 1)) continue;
        const u64 a = (p + *q) / 2;
        const u64 b = (p - *q) / 2;
        if (b == 0 || a > n || b + c <= a || a + c <= b || a + b <= c) continue;
        found.push_back(Triangle::canonical(a, b, c));
      }
    }
  });
  return finish(std::move(found));
}

// ---------------------------------------------------------------------------
// Algorithm III

Corpus generate_algorithm_iii(u64 n, std::optional<LoopRange> range) {
  if (n < 1) return {};
  const LoopRange r = clip(range, outer_range(Algorithm::III, n));
  if (r.last < r.first) return {};

  const nt::Mod420Filter& filter = nt::mod420_square_table();
  const nt::SquarefreeTable sfp(3 * n);
  std::vector<u32> candidates;
  std::vector<u8> pass;
  Corpus out;
  for (u64 a = r.first; a <= r.last; ++a) {
    for (u64 b = (a + 2) / 2; b <= a; ++b) {
      const u64* row = filter.row(a, b);
      candidates.clear();
      u64 residue = (a + 1 - b) % nt::Mod420Filter::kModulus;
      for (u64 c = a + 1 - b; c <= b; ++c) {
        if ((row[residue >> 6] >> (residue & 63)) & 1) candidates.push_back(static_cast<u32>(c));
        if (++residue == nt::Mod420Filter::kModulus) residue = 0;
      }
      pass.resize(candidates.size());
      kernels::heron_square_screen(sfp.data(), static_cast<u32>(a), static_cast<u32>(b),
                                   candidates.data(), candidates.size(), pass.data());
      for (std::size_t k = 0; k < candidates.size(); ++k) {
        if (!pass[k]) continue;
        const u64 c = candidates[k];
        const u64 root = isqrt(static_cast<u128>(heron_product(a, b, c)));
        out.push_back({Triangle::canonical(a, b, c), root});
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Corpus generate(Algorithm alg, u64 n, std::optional<LoopRange> range) {
  switch (alg) {
    case Algorithm::I:
      return generate_algorithm_i(n, range);
    case Algorithm::II:
      return generate_algorithm_ii(n, range);
    case Algorithm::III:
      return generate_algorithm_iii(n, range);
  }
  throw std::invalid_argument("unknown algorithm");
}

Corpus merge_corpora(std::vector<Corpus> parts) {
  Corpus out;
  for (auto& part : parts) out.insert(out.end(), part.begin(), part.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

u128 count_integer_triangles(u64 n) {
  // For fixed a: b runs from floor(a/2)+1 to a and contributes 2b - a
  // choices of c, which sums to b0 (a - b0 + 1).
  u128 total = 0;
  for (u64 a = 1; a <= n; ++a) {
    const u64 b0 = a / 2 + 1;
    total += u128{b0} * (a - b0 + 1);
  }
  return total;
}

u128 count_even_perimeter_triangles(u64 max_perimeter) {
  // Triangles with even perimeter p number round(p^2 / 48); p^2 mod 48 is
  // never 24, so adding 24 and flooring rounds.
  u128 total = 0;
  for (u64 p = 4; p <= max_perimeter; p += 2) total += (u128{p} * p + 24) / 48;
  // equilateral (2k, 2k, 2k) with 6k <= max_perimeter
  return total - max_perimeter / 6;
}

CrossValidationReport cross_validate(u64 n) {
  CrossValidationReport report;
  report.n = n;
  std::vector<std::pair<Algorithm, Corpus>> outputs;
  for (Algorithm alg : {Algorithm::III, Algorithm::I, Algorithm::II}) {
    const auto start = std::chrono::steady_clock::now();
    Corpus c = generate(alg, n);
    const auto stop = std::chrono::steady_clock::now();
    AlgorithmRun run{alg, c.size(), 0, std::chrono::duration<double>(stop - start).count()};
    for (const auto& t : c) run.primitive += t.primitive();
    report.runs.push_back(run);
    outputs.emplace_back(alg, std::move(c));
  }
  const Corpus& ref = outputs.front().second;
  for (std::size_t k = 1; k < outputs.size() && report.consistent; ++k) {
    const Corpus& other = outputs[k].second;
    if (other == ref) continue;
    report.consistent = false;
    std::vector<HeronianTriangle> only_ref, only_other;
    std::set_difference(ref.begin(), ref.end(), other.begin(), other.end(),
                        std::back_inserter(only_ref));
    std::set_difference(other.begin(), other.end(), ref.begin(), ref.end(),
                        std::back_inserter(only_other));
    std::ostringstream os;
    os << "algorithm " << algorithm_name(outputs[k].first) << ": ";
    if (!only_ref.empty()) {
      const auto& t = only_ref.front().tri;
      os << "missing (" << t.a() << "," << t.b() << "," << t.c() << ")";
    } else {
      const auto& t = only_other.front().tri;
      os << "extra (" << t.a() << "," << t.b() << "," << t.c() << ")";
    }
    report.first_difference = os.str();
  }
  report.reference = std::move(outputs.front().second);
  return report;
}

}  // namespace heronian
