#include <numeric>

#include "heronian/kernels.hpp"

namespace heronian::kernels {

void mod420_row_scalar(u32 a, u32 b, const SquareResidues& squares, u64* row) {
  constexpr u32 m = 420;
  for (std::size_t w = 0; w < 7; ++w) row[w] = 0;
  for (u32 c = 0; c < m; ++c) {
    const u32 f1 = (a + b + c) % m;
    const u32 f2 = (a + b + 2 * m - c) % m;
    const u32 f3 = (a + 2 * m - b + c) % m;
    const u32 f4 = (2 * m - a + b + c) % m;
    const u32 prod = (((f1 * f2) % m * f3) % m * f4) % m;
    if (squares[prod]) row[c >> 6] |= u64{1} << (c & 63);
  }
}

void heron_square_screen_scalar(const u32* sfp, u32 a, u32 b, const u32* cs, std::size_t count,
                                u8* out) {
  for (std::size_t i = 0; i < count; ++i) {
    const u32 c = cs[i];
    const u64 s1 = sfp[a + b + c];
    const u64 s2 = sfp[a + b - c];
    const u64 s3 = sfp[a - b + c];
    const u64 s4 = sfp[b + c - a];
    const u64 g12 = std::gcd(s1, s2);
    const u64 g34 = std::gcd(s3, s4);
    out[i] = (s1 / g12) * (s2 / g12) == (s3 / g34) * (s4 / g34);
  }
}

}  // namespace heronian::kernels
