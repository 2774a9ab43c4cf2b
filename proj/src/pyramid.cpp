#include "heronian/pyramid.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "heronian/numtheory.hpp"

namespace heronian {

namespace {

constexpr u64 kNarrowEdgeLimit = u64{1} << 19;

// 288 V^2 from the doubled Gram matrix at P1; edges below 2^19 keep every
// product under 2^120.
i128 det288_narrow(const Tetrahedron& t) {
  const i128 a2 = i128{t.a} * t.a, b2 = i128{t.b} * t.b, c2 = i128{t.c} * t.c;
  const i128 d2 = i128{t.d} * t.d, e2 = i128{t.e} * t.e, f2 = i128{t.f} * t.f;
  // Rows for P2, P3, P4 relative to P1.
  const i128 h11 = 2 * a2, h22 = 2 * c2, h33 = 2 * e2;
  const i128 h12 = a2 + c2 - b2, h13 = a2 + e2 - f2, h23 = c2 + e2 - d2;
  return h11 * (h22 * h33 - h23 * h23) - h12 * (h12 * h33 - h23 * h13) +
         h13 * (h12 * h23 - h22 * h13);
}

BigInt det288_wide(const Tetrahedron& t) {
  auto sq = [](u64 x) { return BigInt(x) * x; };
  const BigInt a2 = sq(t.a), b2 = sq(t.b), c2 = sq(t.c), d2 = sq(t.d), e2 = sq(t.e), f2 = sq(t.f);
  const BigInt h11 = 2 * a2, h22 = 2 * c2, h33 = 2 * e2;
  const BigInt h12 = a2 + c2 - b2, h13 = a2 + e2 - f2, h23 = c2 + e2 - d2;
  return h11 * (h22 * h33 - h23 * h23) - h12 * (h12 * h33 - h23 * h13) +
         h13 * (h12 * h23 - h22 * h13);
}

bool strict_triangle(u64 x, u64 y, u64 z) {
  return x < y + z && y < x + z && z < x + y;
}

// 4A when (x, y, z) is Heronian.
std::optional<u64> heronian_quad_area(u64 x, u64 y, u64 z) {
  if (!strict_triangle(x, y, z)) return std::nullopt;
  return nt::perfect_square_root(static_cast<u128>(heron_product(x, y, z)));
}

// Volume from 288 V^2 when rational: V = sqrt(2 D) / 24.
std::optional<u64> integral_volume(const BigInt& d288) {
  if (d288 <= 0) return std::nullopt;
  const BigInt twice = 2 * d288;
  const BigInt root = boost::multiprecision::sqrt(twice);
  if (root * root != twice) return std::nullopt;
  if (root % 24 != 0) throw std::logic_error("rational volume with integral faces is not integral");
  return static_cast<u64>(root / 24);
}

std::optional<u64> integral_volume(i128 d288) {
  if (d288 <= 0) return std::nullopt;
  const auto root = nt::perfect_square_root(static_cast<u128>(2 * d288));
  if (!root) return std::nullopt;
  if (*root % 24 != 0) throw std::logic_error("rational volume with integral faces is not integral");
  return *root / 24;
}

// Edge-slot permutations induced by the 24 vertex permutations:
// relabeled.edges()[k] = original.edges()[perm[k]].
const std::array<std::array<int, 6>, 24>& edge_permutations() {
  static const auto table = [] {
    std::array<std::array<int, 6>, 24> out{};
    int slot_of[4][4];
    for (int k = 0; k < 6; ++k) {
      slot_of[kEdgeVertices[k][0]][kEdgeVertices[k][1]] = k;
      slot_of[kEdgeVertices[k][1]][kEdgeVertices[k][0]] = k;
    }
    std::array<int, 4> pi{0, 1, 2, 3};
    int idx = 0;
    do {
      for (int k = 0; k < 6; ++k) out[idx][k] = slot_of[pi[kEdgeVertices[k][0]]][pi[kEdgeVertices[k][1]]];
      ++idx;
    } while (std::next_permutation(pi.begin(), pi.end()));
    return out;
  }();
  return table;
}

}  // namespace

u64 Tetrahedron::diameter() const { return std::max({a, b, c, d, e, f}); }

u64 Tetrahedron::gcd() const {
  u64 g = 0;
  for (u64 x : edges()) g = std::gcd(g, x);
  return g;
}

bool is_valid_tetrahedron(const Tetrahedron& t) {
  for (const auto& f : t.faces())
    if (f[0] == 0 || !strict_triangle(f[0], f[1], f[2])) return false;
  return tetra_288_volume_squared(t) > 0;
}

SimplexDistances simplex_of(const Tetrahedron& t) {
  SimplexDistances sd(3);
  const auto x = t.edges();
  for (int k = 0; k < 6; ++k)
    sd.set(kEdgeVertices[k][0], kEdgeVertices[k][1], x[k] * x[k]);
  return sd;
}

BigInt cm_bordered_determinant(const SimplexDistances& sd) {
  const std::size_t size = sd.m + 2;
  std::vector<BigInt> m(size * size);
  auto at = [&](std::size_t i, std::size_t j) -> BigInt& { return m[i * size + j]; };
  for (std::size_t i = 1; i < size; ++i) {
    at(0, i) = 1;
    at(i, 0) = 1;
    for (std::size_t j = 1; j < size; ++j) at(i, j) = sd.at(i - 1, j - 1);
  }
  // Fraction-free Gaussian elimination (Bareiss) with row pivoting.
  int sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < size; ++k) {
    if (at(k, k) == 0) {
      std::size_t r = k + 1;
      while (r < size && at(r, k) == 0) ++r;
      if (r == size) return 0;
      for (std::size_t j = 0; j < size; ++j) std::swap(at(k, j), at(r, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < size; ++i) {
      for (std::size_t j = k + 1; j < size; ++j)
        at(i, j) = (at(i, j) * at(k, k) - at(i, k) * at(k, j)) / prev;
      at(i, k) = 0;
    }
    prev = at(k, k);
  }
  return sign * at(size - 1, size - 1);
}

Rational cm_volume_squared(const SimplexDistances& sd) {
  BigInt denom = BigInt(1) << sd.m;
  BigInt fact = 1;
  for (std::size_t i = 2; i <= sd.m; ++i) fact *= i;
  denom *= fact * fact;
  BigInt det = cm_bordered_determinant(sd);
  if ((sd.m + 1) % 2 == 1) det = -det;
  return Rational(det, denom);
}

BigInt tetra_288_volume_squared(const Tetrahedron& t) {
  if (t.diameter() < kNarrowEdgeLimit) {
    const i128 v = det288_narrow(t);
    if (v >= 0) return BigInt(to_string(static_cast<u128>(v)));
    return -BigInt(to_string(static_cast<u128>(-v)));
  }
  return det288_wide(t);
}

std::optional<PerfectPyramid> is_perfect_pyramid(const Tetrahedron& t) {
  PerfectPyramid out{t, {}, 0};
  const auto faces = t.faces();
  for (int k = 0; k < 4; ++k) {
    const auto q = heronian_quad_area(faces[k][0], faces[k][1], faces[k][2]);
    if (!q) return std::nullopt;
    out.face_areas[k] = *q / 4;
  }
  std::optional<u64> volume;
  if (t.diameter() < kNarrowEdgeLimit)
    volume = integral_volume(det288_narrow(t));
  else
    volume = integral_volume(det288_wide(t));
  if (!volume) return std::nullopt;
  out.volume = *volume;
  return out;
}

std::array<Tetrahedron, 24> tetrahedron_orbit(const Tetrahedron& t) {
  std::array<Tetrahedron, 24> out;
  const auto x = t.edges();
  const auto& perms = edge_permutations();
  for (std::size_t p = 0; p < 24; ++p) {
    std::array<u64, 6> y{};
    for (int k = 0; k < 6; ++k) y[k] = x[perms[p][k]];
    out[p] = Tetrahedron::from_edges(y);
  }
  return out;
}

Tetrahedron canonical_tetrahedron(const Tetrahedron& t) {
  const auto orbit = tetrahedron_orbit(t);
  return *std::min_element(orbit.begin(), orbit.end());
}

// ---------------------------------------------------------------------------
// Pair index

namespace {

// (first side, second side, third side) for each ordered side pair.
std::vector<std::array<u64, 3>> ordered_completions(const Corpus& corpus) {
  std::vector<std::array<u64, 3>> out;
  out.reserve(corpus.size() * 6);
  for (const auto& h : corpus) {
    const std::array<u64, 3> s{h.tri.a(), h.tri.b(), h.tri.c()};
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        if (i != j) out.push_back({s[i], s[j], s[3 - i - j]});
  }
  return out;
}

}  // namespace

PairIndex PairIndex::hashed(const Corpus& corpus, u64 kappa, Phi phi) {
  if (kappa == 0) throw std::invalid_argument("kappa must be positive");
  PairIndex idx;
  idx.kappa_ = kappa;
  idx.phi_ = std::move(phi);
  std::vector<std::pair<u64, u32>> entries;
  for (const auto& [x, y, z] : ordered_completions(corpus)) {
    const u64 bucket = idx.phi_(x, y);
    if (bucket >= kappa) throw std::out_of_range("phi maps outside [0, kappa)");
    entries.emplace_back(bucket, static_cast<u32>(z));
  }
  std::sort(entries.begin(), entries.end());
  entries.erase(std::unique(entries.begin(), entries.end()), entries.end());
  idx.offsets_.assign(kappa + 1, 0);
  for (const auto& en : entries) ++idx.offsets_[en.first + 1];
  std::partial_sum(idx.offsets_.begin(), idx.offsets_.end(), idx.offsets_.begin());
  idx.values_.reserve(entries.size());
  for (const auto& en : entries) idx.values_.push_back(en.second);
  return idx;
}

PairIndex PairIndex::hashed(const Corpus& corpus) {
  return hashed(corpus, kDefaultKappa, &PairIndex::default_phi);
}

PairIndex PairIndex::exact(const Corpus& corpus) {
  PairIndex idx;
  idx.exact_ = true;
  auto all = ordered_completions(corpus);
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  for (std::size_t i = 0; i < all.size();) {
    std::size_t j = i;
    while (j < all.size() && all[j][0] == all[i][0] && all[j][1] == all[i][1]) ++j;
    idx.exact_ranges_[all[i][0] << 32 | all[i][1]] = {idx.values_.size(), idx.values_.size() + (j - i)};
    for (std::size_t k = i; k < j; ++k) idx.values_.push_back(static_cast<u32>(all[k][2]));
    i = j;
  }
  return idx;
}

std::span<const u32> PairIndex::list(u64 a, u64 b) const {
  if (exact_) {
    const auto it = exact_ranges_.find(a << 32 | b);
    if (it == exact_ranges_.end()) return {};
    return {values_.data() + it->second.first, values_.data() + it->second.second};
  }
  const u64 bucket = phi_(a, b);
  return {values_.data() + offsets_[bucket], values_.data() + offsets_[bucket + 1]};
}

// ---------------------------------------------------------------------------
// Search

std::vector<PerfectPyramid> search_perfect_pyramids(u64 n, const Corpus& corpus,
                                                    const PairIndex& index,
                                                    const PyramidSearchOptions& options) {
  LoopRange r{1, n};
  if (options.range) r = {std::max<u64>(1, options.range->first), std::min(n, options.range->last)};
  if (r.last < r.first) return {};

  // For every side d, the ordered pairs (a1, b1) completing it.
  std::vector<std::vector<std::array<u32, 2>>> with_side(n + 1);
  for (const auto& h : corpus) {
    if (h.tri.a() > n) continue;
    const std::array<u64, 3> s{h.tri.a(), h.tri.b(), h.tri.c()};
    for (int i = 0; i < 3; ++i) {
      const u64 p = s[(i + 1) % 3], q = s[(i + 2) % 3];
      with_side[s[i]].push_back({static_cast<u32>(p), static_cast<u32>(q)});
      with_side[s[i]].push_back({static_cast<u32>(q), static_cast<u32>(p)});
    }
  }

  std::vector<Tetrahedron> found;
  auto test = [&](u64 d, u64 a1, u64 a2, u64 b1, u64 b2, u64 x) {
    // (d, a1, a2, b1, b2, x) in edge slots a, c, e, b, f, d.
    if (!heronian_quad_area(a1, x, a2) || !heronian_quad_area(b1, x, b2)) return;
    const Tetrahedron t{d, b1, a1, x, a2, b2};
    if (is_perfect_pyramid(t)) found.push_back(canonical_tetrahedron(t));
  };

  for (u64 d = r.first; d <= r.last; ++d) {
    auto& pairs = with_side[d];
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
    // Swapping the two triangles relabels P3 <-> P4, so unordered pairs suffice.
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      const u64 a1 = pairs[i][0], b1 = pairs[i][1];
      for (std::size_t j = i; j < pairs.size(); ++j) {
        const u64 a2 = pairs[j][0], b2 = pairs[j][1];
        const u64 lb = std::max(a1 > a2 ? a1 - a2 : a2 - a1, b1 > b2 ? b1 - b2 : b2 - b1) + 1;
        const u64 ub = std::min({a1 + a2 - 1, b1 + b2 - 1, d});
        if (lb > ub) continue;
        const u64 span = ub - lb + 1;
        const auto la = index.list(a1, a2);
        const auto lbl = index.list(b1, b2);
        // Scan the shortest of the interval and the two candidate lists.
        if (span <= std::min(la.size(), lbl.size())) {
          for (u64 x = lb; x <= ub; ++x) test(d, a1, a2, b1, b2, x);
        } else {
          const auto& list = la.size() <= lbl.size() ? la : lbl;
          for (u32 x : list)
            if (x >= lb && x <= ub) test(d, a1, a2, b1, b2, x);
        }
      }
    }
  }

  std::sort(found.begin(), found.end());
  found.erase(std::unique(found.begin(), found.end()), found.end());
  std::vector<PerfectPyramid> out;
  out.reserve(found.size());
  for (const auto& t : found) out.push_back(*is_perfect_pyramid(t));
  return out;
}

// ---------------------------------------------------------------------------
// Equal sets

std::optional<EqualKey> parse_equal_key(std::string_view text) {
  if (text == "surface") return EqualKey::Surface;
  if (text == "volume") return EqualKey::Volume;
  if (text == "both") return EqualKey::Both;
  return std::nullopt;
}

std::vector<PyramidGroup> mine_equal_sets(const std::vector<PerfectPyramid>& pyramids, EqualKey key,
                                          std::size_t min_size) {
  std::map<std::pair<u64, u64>, std::vector<PerfectPyramid>> groups;
  for (const auto& p : pyramids) {
    if (!p.tet.primitive()) continue;
    std::pair<u64, u64> k{0, 0};
    if (key != EqualKey::Volume) k.first = p.surface();
    if (key != EqualKey::Surface) k.second = p.volume;
    groups[k].push_back(p);
  }
  std::vector<PyramidGroup> out;
  for (auto& [k, members] : groups) {
    if (members.size() < min_size) continue;
    std::sort(members.begin(), members.end(),
              [](const auto& l, const auto& r) { return std::tie(l.volume, l.tet) < std::tie(r.volume, r.tet); });
    out.push_back({k.first, k.second, std::move(members)});
  }
  return out;
}

std::vector<PyramidGroup> minimal_equal_sets(const std::vector<PerfectPyramid>& pyramids, EqualKey key) {
  const auto groups = mine_equal_sets(pyramids, key, 1);
  std::vector<PyramidGroup> out;
  for (std::size_t k = 1;; ++k) {
    auto it = std::find_if(groups.begin(), groups.end(), [k](const auto& g) { return g.members.size() >= k; });
    if (it == groups.end()) return out;
    out.push_back(*it);
  }
}

// ---------------------------------------------------------------------------
// Arithmetic progressions

std::vector<ApTetrahedron> ap_tetrahedra(u64 n) {
  std::vector<ApTetrahedron> out;
  for (u64 step = 1; 5 * step < n; ++step) {
    for (u64 first = 1; first + 5 * step <= n; ++first) {
      std::array<u64, 6> values{};
      for (u64 k = 0; k < 6; ++k) values[k] = first + k * step;
      std::set<Tetrahedron> classes;
      std::array<u64, 6> arrangement = values;
      do {
        classes.insert(canonical_tetrahedron(Tetrahedron::from_edges(arrangement)));
      } while (std::next_permutation(arrangement.begin(), arrangement.end()));
      for (const auto& t : classes) {
        bool faces_ok = true;
        u32 heronian = 0;
        for (const auto& f : t.faces()) {
          if (!strict_triangle(f[0], f[1], f[2])) faces_ok = false;
          else if (heronian_quad_area(f[0], f[1], f[2])) ++heronian;
        }
        if (!faces_ok || heronian == 0) continue;
        const BigInt d288 = tetra_288_volume_squared(t);
        if (d288 <= 0) continue;
        const BigInt twice = 2 * d288;
        const BigInt root = boost::multiprecision::sqrt(twice);
        if (root * root != twice) continue;
        out.push_back({t, Rational(root, 24), heronian});
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Higher simplices

std::string_view simplex_volume_name(SimplexVolume v) {
  switch (v) {
    case SimplexVolume::Positive:
      return "positive";
    case SimplexVolume::Degenerate:
      return "degenerate";
    case SimplexVolume::Irrational:
      return "irrational";
    case SimplexVolume::NotEmbeddable:
      return "not-embeddable";
  }
  return "?";
}

namespace {

constexpr std::array<std::array<int, 2>, 10> kSimplex4Edges{
    {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}};

// Lexicographically least edge list over the 120 relabelings.
std::array<u64, 10> canonical_simplex4(const std::array<std::array<u64, 5>, 5>& len) {
  std::array<int, 5> pi{0, 1, 2, 3, 4};
  std::array<u64, 10> best{};
  best.fill(~u64{0});
  do {
    std::array<u64, 10> cur{};
    for (int k = 0; k < 10; ++k) cur[k] = len[pi[kSimplex4Edges[k][0]]][pi[kSimplex4Edges[k][1]]];
    best = std::min(best, cur);
  } while (std::next_permutation(pi.begin(), pi.end()));
  return best;
}

Tetrahedron tetra_from(const std::array<std::array<u64, 5>, 5>& len, std::array<int, 4> v) {
  return {len[v[0]][v[1]], len[v[1]][v[2]], len[v[0]][v[2]],
          len[v[2]][v[3]], len[v[0]][v[3]], len[v[1]][v[3]]};
}

}  // namespace

std::vector<HigherSimplex> search_higher_simplices(std::size_t m, u64 n,
                                                   const std::vector<PerfectPyramid>& pyramids) {
  if (m != 4) throw std::invalid_argument("only m = 4 is supported");
  // Labeled face (P1P2, P2P3, P1P3) -> apex edges (P3P4, P1P4, P2P4).
  std::map<std::array<u64, 3>, std::set<std::array<u64, 3>>> apexes;
  for (const auto& p : pyramids) {
    if (p.tet.diameter() > n) continue;
    for (const auto& t : tetrahedron_orbit(p.tet)) apexes[{t.a, t.b, t.c}].insert({t.d, t.e, t.f});
  }

  std::set<std::array<u64, 10>> seen;
  std::vector<HigherSimplex> out;
  for (const auto& [face, tips] : apexes) {
    const std::vector<std::array<u64, 3>> list(tips.begin(), tips.end());
    for (std::size_t i = 0; i < list.size(); ++i) {
      for (std::size_t j = i; j < list.size(); ++j) {
        std::array<std::array<u64, 5>, 5> len{};
        auto set = [&](int x, int y, u64 v) { len[x][y] = len[y][x] = v; };
        set(0, 1, face[0]);
        set(1, 2, face[1]);
        set(0, 2, face[2]);
        set(2, 3, list[i][0]);
        set(0, 3, list[i][1]);
        set(1, 3, list[i][2]);
        set(2, 4, list[j][0]);
        set(0, 4, list[j][1]);
        set(1, 4, list[j][2]);
        for (u64 z = 1; z <= n; ++z) {
          set(3, 4, z);
          if (!heronian_quad_area(len[0][3], len[0][4], z)) continue;
          if (!is_perfect_pyramid(tetra_from(len, {0, 1, 3, 4})) ||
              !is_perfect_pyramid(tetra_from(len, {0, 2, 3, 4})) ||
              !is_perfect_pyramid(tetra_from(len, {1, 2, 3, 4})))
            continue;
          const auto key = canonical_simplex4(len);
          if (!seen.insert(key).second) continue;
          HigherSimplex hs;
          hs.distances = SimplexDistances(4);
          hs.edges.assign(key.begin(), key.end());
          for (int k = 0; k < 10; ++k)
            hs.distances.set(kSimplex4Edges[k][0], kSimplex4Edges[k][1], key[k] * key[k]);
          hs.volume_squared = cm_volume_squared(hs.distances);
          if (hs.volume_squared < 0) {
            hs.status = SimplexVolume::NotEmbeddable;
          } else if (hs.volume_squared == 0) {
            hs.status = SimplexVolume::Degenerate;
          } else {
            const BigInt num = boost::multiprecision::numerator(hs.volume_squared);
            const BigInt den = boost::multiprecision::denominator(hs.volume_squared);
            const BigInt rn = boost::multiprecision::sqrt(num), rd = boost::multiprecision::sqrt(den);
            hs.status = rn * rn == num && rd * rd == den ? SimplexVolume::Positive : SimplexVolume::Irrational;
          }
          out.push_back(std::move(hs));
        }
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& l, const auto& r) { return l.edges < r.edges; });
  return out;
}

}  // namespace heronian
