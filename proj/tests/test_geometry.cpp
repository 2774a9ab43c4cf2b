#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>

#include "heronian/geometry.hpp"
#include "support.hpp"

using namespace heronian;

namespace {

const std::vector<Point> kSeven{{0, 0},           {375360, 0},      {55860, 106855}, {187680, 7990},
                                {187680, 82688}, {142800, 190400}, {232560, 190400}};

const std::vector<std::vector<u64>> kMatrix{
    {0, 375360, 120575, 187850, 205088, 238000, 300560},
    {375360, 0, 336895, 187850, 205088, 300560, 238000},
    {120575, 336895, 0, 164775, 134017, 120575, 195455},
    {187850, 187850, 164775, 0, 74698, 187850, 187850},
    {205088, 205088, 134017, 74698, 0, 116688, 116688},
    {238000, 300560, 120575, 187850, 116688, 0, 89760},
    {300560, 238000, 195455, 187850, 116688, 89760, 0}};

// The 8 lattice symmetries plus a translation.
Point move(const Point& p, int sym, i64 dx, i64 dy) {
  i64 x = p.x, y = p.y;
  if (sym & 1) std::swap(x, y);
  if (sym & 2) x = -x;
  if (sym & 4) y = -y;
  return {x + dx, y + dy};
}

// Concyclic test by the circumcenter in exact rationals (x = num / den).
bool concyclic_oracle(const Point& a, const Point& b, const Point& c, const Point& d) {
  using I = __int128;
  const I bx = b.x - a.x, by = b.y - a.y, cx = c.x - a.x, cy = c.y - a.y;
  const I den = 2 * (bx * cy - by * cx);
  const I b2 = bx * bx + by * by, c2 = cx * cx + cy * cy;
  const I ux = cy * b2 - by * c2, uy = bx * c2 - cx * b2;  // center * den
  const I r2 = ux * ux + uy * uy;                        // radius^2 * den^2
  const I qx = (d.x - a.x) * den - ux, qy = (d.y - a.y) * den - uy;
  return qx * qx + qy * qy == r2;
}

}  // namespace

TEST_CASE("distances") {
  CHECK(integral_distance({0, 0}, {3, 4}) == 5u);
  CHECK_FALSE(integral_distance({0, 0}, {1, 1}).has_value());
  CHECK(integral_distance({0, 0}, {375360, 0}) == 375360u);
  CHECK(squared_distance({-3, 0}, {0, 4}) == 25);
  const i64 big = i64{1} << 62;
  CHECK(squared_distance({-big, 0}, {big, 0}) == u128{1} << 126);
}

TEST_CASE("collinearity") {
  CHECK(collinear({0, 0}, {1, 1}, {2, 2}));
  CHECK_FALSE(collinear({0, 0}, {1, 0}, {0, 1}));
  for (std::size_t i = 0; i < 7; ++i)
    for (std::size_t j = i + 1; j < 7; ++j)
      for (std::size_t k = j + 1; k < 7; ++k) REQUIRE_FALSE(collinear(kSeven[i], kSeven[j], kSeven[k]));
}

TEST_CASE("concyclicity") {
  CHECK(concyclic({0, 0}, {1, 0}, {1, 1}, {0, 1}));
  CHECK_FALSE(concyclic({0, 0}, {1, 0}, {0, 1}, {2, 2}));
  CHECK(concyclic(kSeven[0], kSeven[1], kSeven[5], kSeven[6]));
  CHECK_THROWS_AS(concyclic({0, 0}, {1, 1}, {2, 2}, {5, 0}), std::domain_error);
}

TEST_CASE("predicates are invariant under lattice symmetries and argument order") {
  for (int trial = 0; trial < 3000; ++trial) {
    std::array<Point, 4> p;
    for (auto& q : p) q = {i64(testing::uniform(0, 40)) - 20, i64(testing::uniform(0, 40)) - 20};
    // force a concyclic quadruple now and then: rectangle corners
    if (trial % 5 == 0) p = {{{1, 2}, {7, 2}, {7, 9}, {1, 9}}};
    const bool col = collinear(p[0], p[1], p[2]);
    bool any_col = false;
    for (int s = 0; s < 4; ++s) any_col |= collinear(p[s % 4], p[(s + 1) % 4], p[(s + 2) % 4]);
    const int sym = static_cast<int>(testing::uniform(0, 7));
    const i64 dx = i64(testing::uniform(0, 1000)) - 500, dy = i64(testing::uniform(0, 1000)) - 500;
    std::array<Point, 4> m;
    for (int k = 0; k < 4; ++k) m[k] = move(p[k], sym, dx, dy);
    REQUIRE(collinear(m[0], m[1], m[2]) == col);
    REQUIRE(integral_distance(m[0], m[3]) == integral_distance(p[0], p[3]));
    if (any_col || p[0] == p[1] || p[0] == p[2] || p[0] == p[3] || p[1] == p[2] || p[1] == p[3] ||
        p[2] == p[3])
      continue;
    const bool cyc = concyclic(p[0], p[1], p[2], p[3]);
    REQUIRE(cyc == concyclic_oracle(p[0], p[1], p[2], p[3]));
    REQUIRE(concyclic(m[0], m[1], m[2], m[3]) == cyc);
    std::array<int, 4> idx{0, 1, 2, 3};
    while (std::next_permutation(idx.begin(), idx.end()))
      REQUIRE(concyclic(p[idx[0]], p[idx[1]], p[idx[2]], p[idx[3]]) == cyc);
  }
}

TEST_CASE("the almost-cluster of seven points") {
  const ClusterReport rep = verify_cluster(LatticePointSet(kSeven));
  CHECK(rep.non_integral_pairs.empty());
  CHECK(rep.collinear_triples.empty());
  CHECK(rep.concyclic_quadruples == std::vector<std::array<std::size_t, 4>>{{1, 2, 6, 7}});
  CHECK_FALSE(rep.is_cluster());
  REQUIRE(rep.distance_matrix.size() == 7);
  for (std::size_t i = 0; i < 7; ++i)
    for (std::size_t j = 0; j < 7; ++j) REQUIRE(rep.distance_matrix[i][j] == kMatrix[i][j]);
}

TEST_CASE("eight points with three concyclic quadruples") {
  auto pts = kSeven;
  pts.push_back({319500, 106855});
  const ClusterReport rep = verify_cluster(LatticePointSet(pts));
  CHECK(rep.non_integral_pairs.empty());
  CHECK(rep.collinear_triples.empty());
  CHECK(rep.concyclic_quadruples ==
        std::vector<std::array<std::size_t, 4>>{{1, 2, 3, 8}, {1, 2, 6, 7}, {3, 6, 7, 8}});
}

TEST_CASE("small sets and violations") {
  const ClusterReport two = verify_cluster(LatticePointSet({{0, 0}, {3, 4}}));
  CHECK(two.is_cluster());
  const ClusterReport bad = verify_cluster(LatticePointSet({{0, 0}, {1, 1}, {2, 2}, {0, 5}}));
  CHECK(bad.collinear_triples == std::vector<std::array<std::size_t, 3>>{{1, 2, 3}});
  CHECK(bad.non_integral_pairs.size() == 5);
  CHECK_THROWS_AS(LatticePointSet({{0, 0}, {1, 2}, {0, 0}}), std::invalid_argument);
}

TEST_CASE("point file parsing") {
  std::istringstream good("# header\n0 0\n\n  3 4  \n-5 12 # trailing\n");
  const LatticePointSet ps = parse_points(good);
  CHECK(ps.size() == 3);
  CHECK(ps[2] == Point{-5, 12});

  std::istringstream bad("0 0\n1 2 3\n");
  try {
    parse_points(bad);
    FAIL("expected a parse error");
  } catch (const PointParseError& e) {
    CHECK(e.line == 2);
  }
  std::istringstream junk("0 0\nx 1\n");
  CHECK_THROWS_AS(parse_points(junk), PointParseError);
}
