#pragma once

// Triangle domain model: Heron product, canonical form, Heronian
// classification and the two rational parameterizations.

#include <array>
#include <compare>
#include <optional>
#include <stdexcept>
#include <variant>

#include "heronian/wide.hpp"

namespace heronian {

struct NotTriangleError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Integer side triple in canonical descending order, strict triangle.
class Triangle {
 public:
  // Sorts and validates; throws NotTriangleError.
  static Triangle canonical(u64 x, u64 y, u64 z);

  u64 a() const { return a_; }
  u64 b() const { return b_; }
  u64 c() const { return c_; }
  u64 diameter() const { return a_; }
  u64 perimeter() const { return a_ + b_ + c_; }
  u64 gcd() const;
  bool primitive() const { return gcd() == 1; }

  auto operator<=>(const Triangle&) const = default;

 private:
  Triangle(u64 a, u64 b, u64 c) : a_(a), b_(b), c_(c) {}
  u64 a_, b_, c_;
};

inline Triangle canonicalize(u64 x, u64 y, u64 z) { return Triangle::canonical(x, y, z); }

// (a+b+c)(a+b-c)(a-b+c)(-a+b+c) evaluated on the sorted triple: zero for a
// degenerate triple, negative when the triangle inequality fails.
i128 heron_product(u64 a, u64 b, u64 c);

struct HeronianTriangle {
  Triangle tri;
  u64 quad_area;  // 4A; quad_area^2 is the Heron product

  u64 area() const { return quad_area / 4; }
  bool primitive() const { return tri.primitive(); }
  auto operator<=>(const HeronianTriangle&) const = default;
};

struct NotTriangle {
  bool operator==(const NotTriangle&) const = default;
};
struct NonHeronian {
  Triangle tri;
  bool operator==(const NonHeronian&) const = default;
};
using Classification = std::variant<NotTriangle, NonHeronian, HeronianTriangle>;

Classification classify(u64 a, u64 b, u64 c);
std::optional<HeronianTriangle> as_heronian(u64 a, u64 b, u64 c);

// --- Brahmagupta: a = (p/q) h (i^2+j^2), b = (p/q) i (h^2+j^2),
//                  c = (p/q) (i+h)(ih - j^2)

struct BrahmaguptaParams {
  u64 p, q, h, i, j;
};

struct RationalSides {
  std::array<u128, 3> numerator;  // labeled (a, b, c)
  u64 denominator;                // q
  bool integral() const;
  // Present when integral and the sides form a strict triangle.
  std::optional<Triangle> triangle() const;
};

// Throws std::invalid_argument if ih <= j^2 or the gcd conditions fail.
RationalSides brahmagupta(const BrahmaguptaParams& params);

// --- Ten-parameter form with q = w1 w2 w3 w4, w2 = s t^2, w3 = u v^2:
//   a = p alpha u [(beta w1 v)^2 + (gamma s t)^2] / w4
//   b = p beta s [(alpha w1 t)^2 + (gamma u v)^2] / w4
//   c = p (beta u v^2 + alpha s t^2)(beta alpha w1^2 - gamma^2 s u) / w4

struct ParamTuple {
  u64 p, w1, w4, s, t, u, v, alpha, beta, gamma;

  // Brahmagupta parameters this tuple stands for.
  u128 h() const { return u128{alpha} * w1 * s * t * t; }
  u128 i() const { return u128{beta} * w1 * u * v * v; }
  u128 j() const { return u128{gamma} * s * t * u * v; }
};

enum class ParamStatus { Ok, NonPositive, NonIntegral, NotTriangle, Overflow };

struct ParamResult {
  ParamStatus status = ParamStatus::Overflow;
  u64 a = 0, b = 0, c = 0;  // labeled sides, valid when status == Ok
  bool ok() const { return status == ParamStatus::Ok; }
};

ParamResult param_triangle(const ParamTuple& pt);

// w4 <= 8n and w4 | 8c for the tuple's triangle (false if it has none).
bool w4_bound_check(const ParamTuple& pt, u64 n);

}  // namespace heronian
