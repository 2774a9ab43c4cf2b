// Compiled with -mavx2 on x86-64. Only reached through the dispatcher after
// a cpuid check.

#include "heronian/kernels.hpp"

#if defined(__AVX2__)
#include <immintrin.h>

#include <cstring>

namespace heronian::kernels {

namespace {

// x mod 420 for 0 <= x < 2100, by conditional subtraction.
inline __m256i reduce_small(__m256i x) {
  const __m256i m = _mm256_set1_epi32(420);
  const __m256i m_minus_1 = _mm256_set1_epi32(419);
  for (int i = 0; i < 4; ++i) {
    const __m256i ge = _mm256_cmpgt_epi32(x, m_minus_1);
    x = _mm256_sub_epi32(x, _mm256_and_si256(ge, m));
  }
  return x;
}

// x mod 420 for 0 <= x < 2^24; the float quotient is off by at most one.
inline __m256i reduce_product(__m256i x) {
  const __m256i m = _mm256_set1_epi32(420);
  const __m256 inv = _mm256_set1_ps(1.0f / 420.0f);
  const __m256i q = _mm256_cvttps_epi32(_mm256_mul_ps(_mm256_cvtepi32_ps(x), inv));
  __m256i r = _mm256_sub_epi32(x, _mm256_mullo_epi32(q, m));
  const __m256i neg = _mm256_cmpgt_epi32(_mm256_setzero_si256(), r);
  r = _mm256_add_epi32(r, _mm256_and_si256(neg, m));
  const __m256i over = _mm256_cmpgt_epi32(r, _mm256_set1_epi32(419));
  return _mm256_sub_epi32(r, _mm256_and_si256(over, m));
}

// Trailing zero count of each lane, x in [1, 2^31). Zero lanes give a count
// above 31, which makes srlv/sllv produce 0.
inline __m256i ctz32(__m256i x) {
  const __m256i low = _mm256_and_si256(x, _mm256_sub_epi32(_mm256_setzero_si256(), x));
  const __m256i bits = _mm256_castps_si256(_mm256_cvtepi32_ps(low));
  return _mm256_sub_epi32(_mm256_srli_epi32(bits, 23), _mm256_set1_epi32(127));
}

inline __m256i gcd32(__m256i u, __m256i v) {
  const __m256i zero = _mm256_setzero_si256();
  const __m256i shift = ctz32(_mm256_or_si256(u, v));
  u = _mm256_srlv_epi32(u, ctz32(u));
  for (;;) {
    const __m256i done = _mm256_cmpeq_epi32(v, zero);
    if (_mm256_movemask_epi8(done) == -1) break;
    v = _mm256_srlv_epi32(v, ctz32(v));
    const __m256i lo = _mm256_min_epu32(u, v);
    const __m256i hi = _mm256_max_epu32(u, v);
    u = _mm256_blendv_epi8(lo, u, done);
    v = _mm256_blendv_epi8(_mm256_sub_epi32(hi, lo), zero, done);
  }
  return _mm256_sllv_epi32(u, shift);
}

// Exact s / g per lane through doubles (both operands < 2^31).
inline __m256i exact_div(__m256i s, __m256i g) {
  const __m256d lo = _mm256_div_pd(_mm256_cvtepi32_pd(_mm256_castsi256_si128(s)),
                                   _mm256_cvtepi32_pd(_mm256_castsi256_si128(g)));
  const __m256d hi = _mm256_div_pd(_mm256_cvtepi32_pd(_mm256_extracti128_si256(s, 1)),
                                   _mm256_cvtepi32_pd(_mm256_extracti128_si256(g, 1)));
  return _mm256_set_m128i(_mm256_cvttpd_epi32(hi), _mm256_cvttpd_epi32(lo));
}

// Lane-wise x1*x2 == y1*y2 on 32-bit inputs with 64-bit products.
inline int products_equal_mask(__m256i x1, __m256i x2, __m256i y1, __m256i y2) {
  const __m256i even = _mm256_cmpeq_epi64(_mm256_mul_epu32(x1, x2), _mm256_mul_epu32(y1, y2));
  const __m256i odd = _mm256_cmpeq_epi64(
      _mm256_mul_epu32(_mm256_srli_epi64(x1, 32), _mm256_srli_epi64(x2, 32)),
      _mm256_mul_epu32(_mm256_srli_epi64(y1, 32), _mm256_srli_epi64(y2, 32)));
  // even holds lanes 0,2,4,6 in 64-bit slots; odd holds 1,3,5,7.
  const int me = _mm256_movemask_pd(_mm256_castsi256_pd(even));
  const int mo = _mm256_movemask_pd(_mm256_castsi256_pd(odd));
  int mask = 0;
  for (int k = 0; k < 4; ++k) {
    mask |= ((me >> k) & 1) << (2 * k);
    mask |= ((mo >> k) & 1) << (2 * k + 1);
  }
  return mask;
}

}  // namespace

void mod420_row_avx2(u32 a, u32 b, const SquareResidues& squares, u64* row) {
  for (std::size_t w = 0; w < 7; ++w) row[w] = 0;
  unsigned char* bytes = reinterpret_cast<unsigned char*>(row);
  const __m256i lane = _mm256_setr_epi32(0, 1, 2, 3, 4, 5, 6, 7);
  const __m256i va = _mm256_set1_epi32(static_cast<int>(a));
  const __m256i vb = _mm256_set1_epi32(static_cast<int>(b));
  const __m256i k840 = _mm256_set1_epi32(840);
  const int* table = reinterpret_cast<const int*>(squares.data());
  for (u32 c0 = 0; c0 < 420; c0 += 8) {
    const __m256i vc = _mm256_add_epi32(_mm256_set1_epi32(static_cast<int>(c0)), lane);
    const __m256i ab = _mm256_add_epi32(va, vb);
    const __m256i f1 = reduce_small(_mm256_add_epi32(ab, vc));
    const __m256i f2 = reduce_small(_mm256_sub_epi32(_mm256_add_epi32(ab, k840), vc));
    const __m256i f3 =
        reduce_small(_mm256_add_epi32(_mm256_sub_epi32(_mm256_add_epi32(va, k840), vb), vc));
    const __m256i f4 =
        reduce_small(_mm256_add_epi32(_mm256_sub_epi32(_mm256_add_epi32(vb, k840), va), vc));
    __m256i p = reduce_product(_mm256_mullo_epi32(f1, f2));
    p = reduce_product(_mm256_mullo_epi32(p, f3));
    p = reduce_product(_mm256_mullo_epi32(p, f4));
    const __m256i hit = _mm256_i32gather_epi32(table, p, 4);
    const __m256i yes = _mm256_cmpgt_epi32(hit, _mm256_setzero_si256());
    int mask = _mm256_movemask_ps(_mm256_castsi256_ps(yes));
    if (c0 + 8 > 420) mask &= (1 << (420 - c0)) - 1;
    bytes[c0 / 8] = static_cast<unsigned char>(mask);
  }
}

void heron_square_screen_avx2(const u32* sfp, u32 a, u32 b, const u32* cs, std::size_t count,
                              u8* out) {
  const int* table = reinterpret_cast<const int*>(sfp);
  const __m256i va = _mm256_set1_epi32(static_cast<int>(a));
  const __m256i vb = _mm256_set1_epi32(static_cast<int>(b));
  const __m256i ab = _mm256_add_epi32(va, vb);
  const __m256i ba = _mm256_sub_epi32(vb, va);
  const __m256i amb = _mm256_sub_epi32(va, vb);
  std::size_t i = 0;
  for (; i + 8 <= count; i += 8) {
    const __m256i c = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(cs + i));
    const __m256i s1 = _mm256_i32gather_epi32(table, _mm256_add_epi32(ab, c), 4);
    const __m256i s2 = _mm256_i32gather_epi32(table, _mm256_sub_epi32(ab, c), 4);
    const __m256i s3 = _mm256_i32gather_epi32(table, _mm256_add_epi32(amb, c), 4);
    const __m256i s4 = _mm256_i32gather_epi32(table, _mm256_add_epi32(ba, c), 4);
    const __m256i g12 = gcd32(s1, s2);
    const __m256i g34 = gcd32(s3, s4);
    const int mask = products_equal_mask(exact_div(s1, g12), exact_div(s2, g12),
                                         exact_div(s3, g34), exact_div(s4, g34));
    for (int k = 0; k < 8; ++k) out[i + k] = static_cast<u8>((mask >> k) & 1);
  }
  if (i < count) heron_square_screen_scalar(sfp, a, b, cs + i, count - i, out + i);
}

}  // namespace heronian::kernels

#else

namespace heronian::kernels {

void mod420_row_avx2(u32 a, u32 b, const SquareResidues& squares, u64* row) {
  mod420_row_scalar(a, b, squares, row);
}

void heron_square_screen_avx2(const u32* sfp, u32 a, u32 b, const u32* cs, std::size_t count,
                              u8* out) {
  heron_square_screen_scalar(sfp, a, b, cs, count, out);
}

}  // namespace heronian::kernels

#endif
