#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace heronian {

using u8 = std::uint8_t;
using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;
using i128 = __int128;

std::string to_string(u128 v);
std::string to_string(i128 v);

// Parses a non-negative decimal; nullopt on junk or overflow.
std::optional<u128> parse_u128(std::string_view text);

// floor(sqrt(v)) for the full 128-bit range.
u64 isqrt(u128 v);

// Overflow-checked helpers; false when the result does not fit.
inline bool checked_mul(u128 x, u128 y, u128& out) { return !__builtin_mul_overflow(x, y, &out); }
inline bool checked_add(u128 x, u128 y, u128& out) { return !__builtin_add_overflow(x, y, &out); }

}  // namespace heronian
