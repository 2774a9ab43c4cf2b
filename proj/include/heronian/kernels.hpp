#pragma once

// Data-parallel inner loops. Each kernel has a portable scalar reference
// and, on x86-64, an AVX2 variant chosen at runtime. The variants must be
// bit-identical; tests/test_kernels.cpp checks this.

#include <array>
#include <cstddef>
#include <string_view>

#include "heronian/wide.hpp"

namespace heronian::kernels {

enum class Isa { Scalar, Avx2 };

std::string_view isa_name(Isa isa);

// Best ISA the host supports (cpuid), ignoring overrides.
Isa detected_isa();
// ISA used by the dispatching entry points. Defaults to detected_isa();
// HERONIAN_FORCE_SCALAR=1 in the environment pins Scalar.
Isa active_isa();
// Test hook. Requests above detected_isa() fall back to Scalar.
void set_active_isa(Isa isa);

// 1 where the index is a square modulo 420.
using SquareResidues = std::array<u32, 420>;

// Writes 7 words (420 bits used, padding zeroed): bit c is set iff
// (a+b+c)(a+b-c)(a-b+c)(-a+b+c) mod 420 is a square residue.
// a, b in [0, 420).
void mod420_row_scalar(u32 a, u32 b, const SquareResidues& squares, u64* row);
void mod420_row_avx2(u32 a, u32 b, const SquareResidues& squares, u64* row);
void mod420_row(u32 a, u32 b, const SquareResidues& squares, u64* row);

// Exact square screen for candidates c of a canonical pair (a, b), where
// a >= b >= c and b + c > a. `sfp` is a squarefree-part table covering
// a + b + c. out[i] = 1 iff the Heron product for cs[i] is a perfect
// square: with s_k the squarefree parts of the four factors,
// sfp(f1 f2) == sfp(f3 f4).
void heron_square_screen_scalar(const u32* sfp, u32 a, u32 b, const u32* cs, std::size_t count,
                                u8* out);
void heron_square_screen_avx2(const u32* sfp, u32 a, u32 b, const u32* cs, std::size_t count,
                              u8* out);
void heron_square_screen(const u32* sfp, u32 a, u32 b, const u32* cs, std::size_t count, u8* out);

}  // namespace heronian::kernels
