#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>

#include "heronian/analysis.hpp"
#include "support.hpp"

using namespace heronian;

namespace {

// Median to side x is sqrt(2y^2 + 2z^2 - x^2) / 2.
int brute_median_count(u64 x, u64 y, u64 z) {
  int n = 0;
  const std::array<u64, 3> s{x, y, z};
  for (int k = 0; k < 3; ++k) {
    const i64 v = 2 * i64(s[(k + 1) % 3] * s[(k + 1) % 3]) + 2 * i64(s[(k + 2) % 3] * s[(k + 2) % 3]) -
                  i64(s[k] * s[k]);
    n += v > 0 && testing::brute_square(static_cast<u64>(v));
  }
  return n;
}

}  // namespace

TEST_CASE("perimeter closure") {
  CHECK(perimeter_closure(600) == 1202);
  // a triangle with perimeter 2n+2 has diameter at most n
  for (u64 n = 1; n <= 50; ++n)
    for (u64 a = 1; a <= 3 * n; ++a)
      for (u64 b = 1; b <= a; ++b) {
        if (a + 2 * b <= 2 * n + 2) continue;  // c <= b
        const i64 c = i64(2 * n + 2) - i64(a + b);
        if (c >= 1 && u64(c) <= b && b + u64(c) > a) REQUIRE(a <= n);
      }
}

TEST_CASE("minimal equal perimeter and area tuples") {
  const Corpus corpus = generate_algorithm_iii(600);
  const std::array<u64, 5> perimeters{12, 70, 98, 448, 1170};
  u64 last = 0;
  for (std::size_t k = 1; k <= 5; ++k) {
    const TupleGroup g = minimal_tuples(corpus, 600, k);
    CHECK(g.perimeter == perimeters[k - 1]);
    CHECK(g.perimeter >= last);
    last = g.perimeter;
    CHECK(g.members.size() >= k);
    CHECK(g.quad_area == 4 * g.area);
    for (const auto& h : g.members) {
      const auto again = as_heronian(h.tri.a(), h.tri.b(), h.tri.c());
      REQUIRE(again.has_value());
      CHECK(h.tri.perimeter() == g.perimeter);
      CHECK(again->area() == g.area);
    }
  }
  const TupleGroup one = minimal_tuples(corpus, 600, 1);
  CHECK(one.members.size() == 1);
  CHECK(one.members[0].tri == canonicalize(3, 4, 5));
  // the printed area column is 4A
  CHECK(minimal_tuples(corpus, 600, 2).quad_area == 840);
  CHECK(minimal_tuples(corpus, 600, 3).quad_area == 1680);
  CHECK_THROWS_AS(minimal_tuples(corpus, 600, 6), IncompleteCorpusError);
  CHECK_THROWS_AS(minimal_tuples(generate_algorithm_iii(40), 40, 3), IncompleteCorpusError);
  CHECK(minimal_tuples(generate_algorithm_iii(49), 49, 3).perimeter == 98);
}

TEST_CASE("equal perimeter and area groups match a direct grouping") {
  const Corpus corpus = generate_algorithm_iii(300);
  std::map<std::pair<u64, u64>, std::size_t> brute;
  for (const auto& h : corpus)
    if (h.tri.perimeter() <= perimeter_closure(300)) ++brute[{h.tri.perimeter(), h.quad_area}];
  std::vector<std::pair<u64, u64>> expect, got;
  for (const auto& [key, n] : brute)
    if (n >= 2) expect.push_back(key);
  for (const auto& g : equal_perimeter_area_groups(corpus, 300)) got.emplace_back(g.perimeter, g.quad_area);
  CHECK(got == expect);
}

TEST_CASE("rational medians") {
  const auto iso = rational_medians(*as_heronian(6, 5, 5));
  CHECK(iso.doubled[0] == 8u);  // median to side 6 is 4
  CHECK(iso.count() >= 1);
  const auto right = rational_medians(*as_heronian(5, 4, 3));
  CHECK(right.count() == 1);
  CHECK(right.doubled[0] == 5u);
  CHECK_FALSE(right.doubled[1].has_value());
  CHECK(rational_medians(*as_heronian(73, 51, 26)).count() == 2);

  for (const auto& h : generate_algorithm_iii(400)) {
    const u64 a = h.tri.a(), b = h.tri.b(), c = h.tri.c();
    const int n = rational_medians(h).count();
    REQUIRE(n == brute_median_count(a, b, c));
    REQUIRE(n == brute_median_count(c, a, b));
    REQUIRE(n == brute_median_count(b, c, a));
  }
}

TEST_CASE("corpus statistics") {
  const CorpusStats five = corpus_stats(generate_algorithm_iii(5));
  CHECK(five.total == 1);
  CHECK(five.primitive == 1);
  const Corpus c = generate_algorithm_iii(10);
  u64 primitive = 0;
  for (const auto& [a, b, cc] : testing::brute_heronian(10)) primitive += std::gcd(a, std::gcd(b, cc)) == 1;
  CHECK(corpus_stats(c).primitive == primitive);
  const CorpusStats st = corpus_stats(generate_algorithm_iii(200));
  u64 sum = 0;
  for (const auto& [d, count] : st.per_diameter) sum += count.total;
  CHECK(sum == st.total);
}
