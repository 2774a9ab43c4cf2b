#include <atomic>
#include <cstdlib>
#include <string_view>

#include "heronian/kernels.hpp"

namespace heronian::kernels {

namespace {

Isa initial_isa() {
  if (const char* env = std::getenv("HERONIAN_FORCE_SCALAR"); env && std::string_view(env) == "1")
    return Isa::Scalar;
  return detected_isa();
}

std::atomic<Isa>& active() {
  static std::atomic<Isa> isa{initial_isa()};
  return isa;
}

}  // namespace

std::string_view isa_name(Isa isa) { return isa == Isa::Avx2 ? "avx2" : "scalar"; }

Isa detected_isa() {
#if defined(HERONIAN_HAVE_AVX2) && (defined(__x86_64__) || defined(__i386__))
  static const bool has_avx2 = __builtin_cpu_supports("avx2");
  return has_avx2 ? Isa::Avx2 : Isa::Scalar;
#else
  return Isa::Scalar;
#endif
}

Isa active_isa() { return active().load(std::memory_order_relaxed); }

void set_active_isa(Isa isa) {
  if (isa == Isa::Avx2 && detected_isa() != Isa::Avx2) isa = Isa::Scalar;
  active().store(isa, std::memory_order_relaxed);
}

void mod420_row(u32 a, u32 b, const SquareResidues& squares, u64* row) {
  if (active_isa() == Isa::Avx2)
    mod420_row_avx2(a, b, squares, row);
  else
    mod420_row_scalar(a, b, squares, row);
}

void heron_square_screen(const u32* sfp, u32 a, u32 b, const u32* cs, std::size_t count,
                         u8* out) {
  // The AVX2 path works in signed 32-bit lanes.
  constexpr u32 kLaneLimit = u32{1} << 30;
  if (active_isa() == Isa::Avx2 && a < kLaneLimit / 2)
    heron_square_screen_avx2(sfp, a, b, cs, count, out);
  else
    heron_square_screen_scalar(sfp, a, b, cs, count, out);
}

}  // namespace heronian::kernels
