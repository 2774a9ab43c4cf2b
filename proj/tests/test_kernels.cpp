#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstring>

#include "heronian/generate.hpp"
#include "heronian/kernels.hpp"
#include "heronian/numtheory.hpp"
#include "support.hpp"

using namespace heronian;
using namespace heronian::kernels;

namespace {

SquareResidues squares() {
  SquareResidues sq{};
  for (u32 k = 0; k < 420; ++k) sq[k * k % 420] = 1;
  return sq;
}

struct IsaGuard {
  Isa saved = active_isa();
  ~IsaGuard() { set_active_isa(saved); }
};

}  // namespace

TEST_CASE("mod-420 rows: scalar and AVX2 agree on every (a, b)") {
  if (detected_isa() != Isa::Avx2) {
    MESSAGE("host lacks AVX2; only the scalar path is exercised");
    return;
  }
  const SquareResidues sq = squares();
  u64 s[7], v[7];
  for (u32 a = 0; a < 420; ++a)
    for (u32 b = 0; b < 420; ++b) {
      std::memset(v, 0xff, sizeof v);
      mod420_row_scalar(a, b, sq, s);
      mod420_row_avx2(a, b, sq, v);
      REQUIRE(std::memcmp(s, v, sizeof s) == 0);
    }
}

TEST_CASE("mod-420 row scalar matches the definition") {
  const SquareResidues sq = squares();
  u64 row[7];
  for (int k = 0; k < 300; ++k) {
    const u32 a = testing::uniform(0, 419), b = testing::uniform(0, 419);
    mod420_row_scalar(a, b, sq, row);
    for (u32 c = 0; c < 448; ++c) {
      const bool bit = (row[c >> 6] >> (c & 63)) & 1u;
      if (c >= 420) {
        REQUIRE_FALSE(bit);
        continue;
      }
      auto mod = [](i64 x) { return ((x % 420) + 420) % 420; };
      i64 p = mod(a + b + c);
      for (i64 f : {i64(a) + b - c, i64(a) - b + c, -i64(a) + b + c}) p = p * mod(f) % 420;
      REQUIRE(bit == (sq[p] != 0));
    }
  }
}

TEST_CASE("square screen: scalar and AVX2 agree, and match the Heron product") {
  const u64 limit = 3 * 5000;
  const nt::SquarefreeTable sfp(limit);
  std::vector<u32> cs;
  std::vector<u8> s, v;
  for (int k = 0; k < 400; ++k) {
    const u32 a = testing::uniform(2, 5000), b = testing::uniform(a / 2 + 1, a);
    cs.clear();
    for (u32 c = a - b + 1; c <= b; ++c) cs.push_back(c);
    s.assign(cs.size(), 7);
    v.assign(cs.size(), 9);
    heron_square_screen_scalar(sfp.data(), a, b, cs.data(), cs.size(), s.data());
    if (detected_isa() == Isa::Avx2) {
      heron_square_screen_avx2(sfp.data(), a, b, cs.data(), cs.size(), v.data());
      REQUIRE(s == v);
    }
    for (std::size_t i = 0; i < cs.size(); ++i) {
      const u64 c = cs[i];
      const unsigned __int128 p = (unsigned __int128)(a + b + c) * (a + b - c) * (a - b + c) * (b + c - a);
      REQUIRE((s[i] == 1) == testing::brute_square(p));
    }
  }
}

TEST_CASE("odd tail lengths take the same path") {
  if (detected_isa() != Isa::Avx2) return;
  const nt::SquarefreeTable sfp(400);
  for (std::size_t len = 0; len <= 17; ++len) {
    std::vector<u32> cs;
    for (u32 c = 20; cs.size() < len; ++c) cs.push_back(c);
    std::vector<u8> s(len), v(len);
    heron_square_screen_scalar(sfp.data(), 120, 110, cs.data(), len, s.data());
    heron_square_screen_avx2(sfp.data(), 120, 110, cs.data(), len, v.data());
    REQUIRE(s == v);
  }
}

TEST_CASE("generation is identical under either dispatch") {
  IsaGuard guard;
  set_active_isa(Isa::Scalar);
  CHECK(active_isa() == Isa::Scalar);
  const Corpus scalar = generate_algorithm_iii(400);
  set_active_isa(Isa::Avx2);
  CHECK(active_isa() == detected_isa());
  const Corpus wide = generate_algorithm_iii(400);
  CHECK(scalar == wide);
  CHECK(isa_name(Isa::Avx2) == "avx2");
}
