#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <set>

#include "heronian/numtheory.hpp"
#include "heronian/pyramid.hpp"
#include "support.hpp"

using namespace heronian;

namespace {

const Tetrahedron kSmallest{117, 84, 51, 52, 53, 80};
const Tetrahedron kRow6384{160, 153, 25, 39, 56, 120};

// Laplace expansion along the first row; independent of the library's
// elimination.
BigInt laplace(const std::vector<std::vector<BigInt>>& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  BigInt det = 0;
  for (std::size_t col = 0; col < n; ++col) {
    if (m[0][col] == 0) continue;
    std::vector<std::vector<BigInt>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<BigInt> row;
      for (std::size_t c = 0; c < n; ++c)
        if (c != col) row.push_back(m[r][c]);
      minor.push_back(std::move(row));
    }
    const BigInt term = m[0][col] * laplace(minor);
    det += (col % 2 ? -term : term);
  }
  return det;
}

BigInt bordered_by_laplace(const SimplexDistances& sd) {
  const std::size_t k = sd.m + 2;
  std::vector<std::vector<BigInt>> b(k, std::vector<BigInt>(k, 1));
  b[0][0] = 0;
  for (std::size_t i = 0; i <= sd.m; ++i)
    for (std::size_t j = 0; j <= sd.m; ++j) b[i + 1][j + 1] = sd.at(i, j);
  return laplace(b);
}

std::vector<PerfectPyramid> search(u64 n, const Corpus& corpus) {
  return search_perfect_pyramids(n, corpus, PairIndex::hashed(corpus));
}

// Brute force over pairs of triangles sharing the edge d, trying every x.
std::set<Tetrahedron> brute_pyramids(u64 n, const Corpus& corpus) {
  std::map<u64, std::vector<std::pair<u64, u64>>> with_side;
  for (const auto& h : corpus) {
    const std::array<u64, 3> s{h.tri.a(), h.tri.b(), h.tri.c()};
    for (int k = 0; k < 3; ++k) {
      const u64 d = s[k], p = s[(k + 1) % 3], q = s[(k + 2) % 3];
      with_side[d].emplace_back(p, q);
      with_side[d].emplace_back(q, p);
    }
  }
  std::set<Tetrahedron> out;
  for (auto& [d, list] : with_side) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    for (const auto& [a1, b1] : list)
      for (const auto& [a2, b2] : list)
        for (u64 x = 1; x <= n; ++x) {
          const Tetrahedron t{d, b1, a1, x, a2, b2};
          if (t.diameter() > n) continue;
          if (const auto p = is_perfect_pyramid(t)) out.insert(canonical_tetrahedron(t));
        }
  }
  return out;
}

}  // namespace

TEST_CASE("Cayley-Menger volumes") {
  SimplexDistances tri(2);
  tri.set(0, 1, 1);
  tri.set(0, 2, 1);
  tri.set(1, 2, 1);
  CHECK(cm_volume_squared(tri) == Rational(3, 16));

  // unit square: four coplanar points
  SimplexDistances flat(3);
  flat.set(0, 1, 1);
  flat.set(1, 2, 1);
  flat.set(2, 3, 1);
  flat.set(0, 3, 1);
  flat.set(0, 2, 2);
  flat.set(1, 3, 2);
  CHECK(cm_volume_squared(flat) == 0);

  // corner of the unit cube: V = 1/6
  SimplexDistances corner(3);
  corner.set(0, 1, 1);
  corner.set(0, 2, 1);
  corner.set(0, 3, 1);
  corner.set(1, 2, 2);
  corner.set(1, 3, 2);
  corner.set(2, 3, 2);
  CHECK(cm_volume_squared(corner) == Rational(1, 36));

  // regular 4-simplex with unit edge: V^2 = 5 / 9216
  SimplexDistances reg(4);
  for (std::size_t i = 0; i <= 4; ++i)
    for (std::size_t j = i + 1; j <= 4; ++j) reg.set(i, j, 1);
  CHECK(cm_volume_squared(reg) == Rational(5, 9216));

  const Rational v2 = cm_volume_squared(simplex_of(kSmallest));
  CHECK(v2 > 0);
  CHECK(denominator(v2) == 1);
  const BigInt root = sqrt(numerator(v2));
  CHECK(root * root == numerator(v2));
}

TEST_CASE("bordered determinant matches cofactor expansion") {
  for (int k = 0; k < 300; ++k) {
    const std::size_t m = 2 + k % 3;
    SimplexDistances sd(m);
    for (std::size_t i = 0; i <= m; ++i)
      for (std::size_t j = i + 1; j <= m; ++j) {
        const u64 e = testing::uniform(1, 1 << 20);
        sd.set(i, j, e * e);
      }
    REQUIRE(cm_bordered_determinant(sd) == bordered_by_laplace(sd));
  }
}

TEST_CASE("288 V^2 narrow and wide paths") {
  for (int k = 0; k < 3000; ++k) {
    // narrow inputs below 2^19 and wide ones above
    const u64 hi = k % 2 ? (u64{1} << 19) - 1 : u64{1} << 30;
    Tetrahedron t{};
    for (u64* e : {&t.a, &t.b, &t.c, &t.d, &t.e, &t.f}) *e = testing::uniform(1, hi);
    REQUIRE(tetra_288_volume_squared(t) == cm_bordered_determinant(simplex_of(t)));
  }
}

TEST_CASE("planar volume agrees with the Heron product for n <= 200") {
  for (const auto& [a, b, c] : testing::brute_heronian(200)) {
    SimplexDistances sd(2);
    sd.set(0, 1, a * a);
    sd.set(1, 2, b * b);
    sd.set(0, 2, c * c);
    REQUIRE(cm_volume_squared(sd) == Rational(BigInt(to_string(heron_product(a, b, c))), 16));
  }
}

TEST_CASE("perfect pyramid predicate") {
  const auto p = is_perfect_pyramid(kSmallest);
  REQUIRE(p.has_value());
  CHECK(p->volume > 0);
  const auto q = is_perfect_pyramid(kRow6384);
  REQUIRE(q.has_value());
  CHECK(q->surface() == 6384);
  CHECK(q->volume == 8064);
  CHECK_FALSE(is_perfect_pyramid({1, 1, 1, 1, 1, 1}).has_value());
  CHECK_FALSE(is_valid_tetrahedron({1, 1, 5, 1, 1, 1}));
  CHECK(is_valid_tetrahedron(kSmallest));

  // every face area is that of the Heronian face, the volume from 288 V^2
  for (std::size_t k = 0; k < 4; ++k) {
    const auto f = p->tet.faces()[k];
    CHECK(as_heronian(f[0], f[1], f[2])->area() == p->face_areas[k]);
  }
  CHECK(BigInt(288) * p->volume * p->volume == tetra_288_volume_squared(kSmallest));
}

TEST_CASE("scaling a perfect pyramid") {
  const auto base = *is_perfect_pyramid(kSmallest);
  for (u64 k = 2; k <= 9; ++k) {
    Tetrahedron t = kSmallest;
    for (u64* e : {&t.a, &t.b, &t.c, &t.d, &t.e, &t.f}) *e *= k;
    const auto p = is_perfect_pyramid(t);
    REQUIRE(p.has_value());
    for (int i = 0; i < 4; ++i) CHECK(p->face_areas[i] == base.face_areas[i] * k * k);
    CHECK(p->volume == base.volume * k * k * k);
    CHECK(t.gcd() == k);
  }
}

TEST_CASE("orbit and canonical form") {
  const auto orbit = tetrahedron_orbit(kSmallest);
  const std::set<Tetrahedron> distinct(orbit.begin(), orbit.end());
  CHECK(distinct.size() == 24);
  const Tetrahedron canon = canonical_tetrahedron(kSmallest);
  for (const auto& t : orbit) {
    REQUIRE(canonical_tetrahedron(t) == canon);
    REQUIRE(is_perfect_pyramid(t).has_value());
    REQUIRE(is_perfect_pyramid(t)->volume == is_perfect_pyramid(kSmallest)->volume);
    auto e = t.edges(), f = kSmallest.edges();
    std::sort(e.begin(), e.end());
    std::sort(f.begin(), f.end());
    REQUIRE(e == f);
  }
  CHECK(*std::min_element(distinct.begin(), distinct.end()) == canon);
  const Tetrahedron regular{7, 7, 7, 7, 7, 7};
  CHECK(canonical_tetrahedron(regular) == regular);
}

TEST_CASE("coincidence classes") {
  const auto labels = coincidence_labels();
  CHECK(labels.size() == 25);
  CHECK(classify_coincidence({5, 5, 5, 5, 5, 5}) == "1(i)");
  CHECK(classify_coincidence(kSmallest) == "6(i)");
  CHECK(classify_coincidence({4, 5, 6, 4, 5, 6}) == "3(vi)");

  // each representative pattern classifies back to its own label
  for (std::string_view label : labels) {
    const auto pat = coincidence_pattern(label);
    Tetrahedron t{};
    auto edges = t.edges();
    for (int k = 0; k < 6; ++k) edges[k] = 10 + pat[k];
    REQUIRE(classify_coincidence(Tetrahedron::from_edges(edges)) == label);
  }

  // the 203 set partitions of six edges fall into exactly 25 classes, each
  // label covering one class
  std::map<std::string_view, std::set<Tetrahedron>> seen;
  std::array<int, 6> rgs{};
  std::function<void(int, int)> walk = [&](int pos, int blocks) {
    if (pos == 6) {
      std::array<u64, 6> e{};
      for (int k = 0; k < 6; ++k) e[k] = 10 + rgs[k];
      const Tetrahedron t = Tetrahedron::from_edges(e);
      seen[classify_coincidence(t)].insert(canonical_tetrahedron(t));
      return;
    }
    for (int b = 0; b <= blocks; ++b) {
      rgs[pos] = b;
      walk(pos + 1, std::max(blocks, b + 1));
    }
  };
  walk(0, 0);
  CHECK(seen.size() == 25);
}

TEST_CASE("pair index lists") {
  const Corpus corpus = generate_algorithm_iii(200);
  const PairIndex exact = PairIndex::exact(corpus);
  CHECK(exact.is_exact());
  std::map<std::pair<u64, u64>, std::set<u32>> expect;
  for (const auto& h : corpus) {
    const std::array<u64, 3> s{h.tri.a(), h.tri.b(), h.tri.c()};
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        if (i != j) expect[{s[i], s[j]}].insert(static_cast<u32>(s[3 - i - j]));
  }
  for (const auto& [key, cs] : expect) {
    const auto got = exact.list(key.first, key.second);
    REQUIRE(std::vector<u32>(got.begin(), got.end()) == std::vector<u32>(cs.begin(), cs.end()));
  }
  CHECK(exact.list(7, 7).empty());

  const PairIndex hashed = PairIndex::hashed(corpus);
  CHECK(hashed.kappa() == PairIndex::kDefaultKappa);
  for (const auto& [key, cs] : expect) {
    const auto got = hashed.list(key.first, key.second);
    for (u32 c : cs) REQUIRE(std::binary_search(got.begin(), got.end(), c));
  }
}

TEST_CASE("search against brute force, and independence from (kappa, phi)") {
  const Corpus c150 = generate_algorithm_iii(150);
  const auto found = search(150, c150);
  std::set<Tetrahedron> got;
  for (const auto& p : found) got.insert(p.tet);
  CHECK(got == brute_pyramids(150, c150));

  const Corpus corpus = generate_algorithm_iii(200);
  const auto base = search(200, corpus);
  const auto by_exact = search_perfect_pyramids(200, corpus, PairIndex::exact(corpus));
  const auto tiny = search_perfect_pyramids(200, corpus, PairIndex::hashed(corpus, 7, [](u64 a, u64 b) {
                                              return (a + 3 * b) % 7;
                                            }));
  const auto single = search_perfect_pyramids(200, corpus, PairIndex::hashed(corpus, 1, [](u64, u64) {
                                                return u64{0};
                                              }));
  CHECK(base == by_exact);
  CHECK(base == tiny);
  CHECK(base == single);
  CHECK(!base.empty());

  // sharded outer loop
  std::vector<PerfectPyramid> merged;
  const PairIndex index = PairIndex::hashed(corpus);
  for (LoopRange r : {LoopRange{1, 90}, LoopRange{91, 160}, LoopRange{161, 200}}) {
    const auto part = search_perfect_pyramids(200, corpus, index, {r});
    merged.insert(merged.end(), part.begin(), part.end());
  }
  std::sort(merged.begin(), merged.end());
  merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
  CHECK(merged == base);
}

TEST_CASE("smallest perfect pyramid") {
  const Corpus corpus = generate_algorithm_iii(117);
  CHECK(search(116, corpus).empty());
  const auto found = search(117, corpus);
  REQUIRE(found.size() == 1);
  CHECK(found[0].tet == canonical_tetrahedron(kSmallest));
  for (const auto& p : found) CHECK(p.tet == canonical_tetrahedron(p.tet));
}

TEST_CASE("no solutions in the excluded coincidence classes at n = 300") {
  const Corpus corpus = generate_algorithm_iii(300);
  const std::set<std::string_view> excluded{"1(i)", "2(i)", "2(ii)", "2(iii)", "2(iv)", "2(v)",
                                            "3(i)", "3(iii)", "3(iv)", "3(vii)", "4(i)"};
  const auto found = search(300, corpus);
  CHECK(!found.empty());
  for (const auto& p : found) {
    REQUIRE(excluded.count(classify_coincidence(p.tet)) == 0);
    // integrality of every result
    REQUIRE(is_perfect_pyramid(p.tet) == p);
  }
}

TEST_CASE("third-side completions stay below 4 tau(ab)^2 for a, b <= 300") {
  const Corpus corpus = generate_algorithm_iii(600);
  std::map<std::pair<u64, u64>, std::set<u64>> third;
  for (const auto& h : corpus) {
    const std::array<u64, 3> s{h.tri.a(), h.tri.b(), h.tri.c()};
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        if (i != j && s[i] <= 300 && s[j] <= 300) third[{s[i], s[j]}].insert(s[3 - i - j]);
  }
  CHECK(!third.empty());
  for (const auto& [key, cs] : third) {
    const u64 tau = nt::factorize(key.first * key.second).divisor_count();
    REQUIRE(cs.size() <= 4 * tau * tau);
  }
}

TEST_CASE("equal surface and volume sets") {
  const Corpus corpus = generate_algorithm_iii(600);
  const auto found = search(600, corpus);

  const auto surface = mine_equal_sets(found, EqualKey::Surface);
  REQUIRE(!surface.empty());
  CHECK(surface[0].surface == 64584);
  REQUIRE(surface[0].members.size() == 2);
  CHECK(surface[0].members[0].tet == canonical_tetrahedron({595, 208, 429, 116, 325, 276}));
  CHECK(surface[0].members[1].tet == canonical_tetrahedron({595, 116, 507, 208, 325, 276}));
  CHECK(mine_equal_sets(found, EqualKey::Both).empty());

  const auto minimal = minimal_equal_sets(found, EqualKey::Surface);
  REQUIRE(minimal.size() >= 2);
  CHECK(minimal[0].surface == 6384);
  CHECK(minimal[0].members.size() == 1);
  CHECK(minimal[1].surface == 64584);

  // regroup volume sets by hand
  std::map<u64, std::vector<PerfectPyramid>> by_volume;
  for (const auto& p : found)
    if (p.tet.primitive()) by_volume[p.volume].push_back(p);
  std::vector<std::pair<u64, std::size_t>> expect, got;
  for (const auto& [v, members] : by_volume)
    if (members.size() >= 2) expect.emplace_back(v, members.size());
  for (const auto& g : mine_equal_sets(found, EqualKey::Volume)) got.emplace_back(g.volume, g.members.size());
  CHECK(got == expect);

  CHECK(parse_equal_key("surface") == EqualKey::Surface);
  CHECK(parse_equal_key("both") == EqualKey::Both);
  CHECK_FALSE(parse_equal_key("area").has_value());
}

TEST_CASE("tetrahedra with edges in arithmetic progression") {
  const Tetrahedron known = canonical_tetrahedron({10, 8, 6, 7, 11, 9});
  const auto small = ap_tetrahedra(11);
  CHECK(std::any_of(small.begin(), small.end(), [&](const auto& t) { return t.tet == known; }));

  const auto found = ap_tetrahedra(100);
  REQUIRE(!found.empty());
  for (const auto& t : found) {
    REQUIRE(t.heronian_faces >= 1);
    REQUIRE(t.heronian_faces < 4);
    REQUIRE(t.volume > 0);
    const u64 g = t.tet.gcd();
    Tetrahedron base = t.tet;
    for (u64* e : {&base.a, &base.b, &base.c, &base.d, &base.e, &base.f}) *e /= g;
    REQUIRE(canonical_tetrahedron(base) == known);
  }
  CHECK(found.size() == 9);
}

TEST_CASE("4-simplices from perfect facets") {
  CHECK_THROWS_AS(search_higher_simplices(5, 10, {}), std::invalid_argument);
  const Corpus corpus = generate_algorithm_iii(300);
  const auto pyramids = search(300, corpus);
  for (const auto& s : search_higher_simplices(4, 300, pyramids)) {
    REQUIRE(s.edges.size() == 10);
    // every tetrahedral facet is a perfect pyramid
    for (std::size_t skip = 0; skip < 5; ++skip) {
      std::vector<std::size_t> v;
      for (std::size_t i = 0; i < 5; ++i)
        if (i != skip) v.push_back(i);
      auto len = [&](std::size_t i, std::size_t j) { return testing::brute_isqrt(s.distances.at(v[i], v[j])); };
      const Tetrahedron t{len(0, 1), len(1, 2), len(0, 2), len(2, 3), len(0, 3), len(1, 3)};
      REQUIRE(is_perfect_pyramid(t).has_value());
    }
    REQUIRE(s.volume_squared == cm_volume_squared(s.distances));
    REQUIRE(s.status != SimplexVolume::Positive);
  }
  CHECK(simplex_volume_name(SimplexVolume::Degenerate) == "degenerate");
}
