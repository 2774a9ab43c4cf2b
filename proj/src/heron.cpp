#include "heronian/heron.hpp"

#include <algorithm>
#include <numeric>

#include "heronian/numtheory.hpp"

namespace heronian {

Triangle Triangle::canonical(u64 x, u64 y, u64 z) {
  std::array<u64, 3> s{x, y, z};
  std::sort(s.begin(), s.end(), std::greater<>());
  if (s[2] == 0 || s[1] + s[2] <= s[0]) throw NotTriangleError("sides do not form a triangle");
  return Triangle(s[0], s[1], s[2]);
}

u64 Triangle::gcd() const { return std::gcd(std::gcd(a_, b_), c_); }

i128 heron_product(u64 x, u64 y, u64 z) {
  std::array<u64, 3> s{x, y, z};
  std::sort(s.begin(), s.end(), std::greater<>());
  const i128 a = s[0], b = s[1], c = s[2];
  return (a + b + c) * (a + b - c) * (a - b + c) * (-a + b + c);
}

Classification classify(u64 a, u64 b, u64 c) {
  if (a == 0 || b == 0 || c == 0) return NotTriangle{};
  const i128 product = heron_product(a, b, c);
  if (product <= 0) return NotTriangle{};
  const Triangle tri = Triangle::canonical(a, b, c);
  if (auto root = nt::perfect_square_root(static_cast<u128>(product)))
    return HeronianTriangle{tri, *root};
  return NonHeronian{tri};
}

std::optional<HeronianTriangle> as_heronian(u64 a, u64 b, u64 c) {
  auto cls = classify(a, b, c);
  if (auto* h = std::get_if<HeronianTriangle>(&cls)) return *h;
  return std::nullopt;
}

// --- Brahmagupta ------------------------------------------------------------

bool RationalSides::integral() const {
  return std::all_of(numerator.begin(), numerator.end(),
                     [&](u128 x) { return x % denominator == 0; });
}

std::optional<Triangle> RationalSides::triangle() const {
  if (!integral()) return std::nullopt;
  const u128 limit = ~u64{0};
  std::array<u64, 3> s{};
  for (int k = 0; k < 3; ++k) {
    const u128 side = numerator[k] / denominator;
    if (side > limit) return std::nullopt;
    s[k] = static_cast<u64>(side);
  }
  try {
    return Triangle::canonical(s[0], s[1], s[2]);
  } catch (const NotTriangleError&) {
    return std::nullopt;
  }
}

RationalSides brahmagupta(const BrahmaguptaParams& bp) {
  const u128 h = bp.h, i = bp.i, j = bp.j;
  if (bp.q == 0 || bp.p == 0 || i * h <= j * j)
    throw std::invalid_argument("brahmagupta: needs positive p, q and ih > j^2");
  if (std::gcd(bp.p, bp.q) != 1 || std::gcd(std::gcd(bp.h, bp.i), bp.j) != 1)
    throw std::invalid_argument("brahmagupta: needs gcd(p,q) = gcd(h,i,j) = 1");
  RationalSides out{};
  out.numerator[0] = bp.p * h * (i * i + j * j);
  out.numerator[1] = bp.p * i * (h * h + j * j);
  out.numerator[2] = bp.p * (i + h) * (i * h - j * j);
  out.denominator = bp.q;
  return out;
}

// --- ten-parameter form -----------------------------------------------------

namespace {

struct Checked {
  u128 v;
  bool ok = true;
  Checked operator*(Checked o) const {
    Checked r{0, ok && o.ok};
    if (r.ok) r.ok = checked_mul(v, o.v, r.v);
    return r;
  }
  Checked operator+(Checked o) const {
    Checked r{0, ok && o.ok};
    if (r.ok) r.ok = checked_add(v, o.v, r.v);
    return r;
  }
};

Checked ck(u64 x) { return Checked{x}; }

}  // namespace

ParamResult param_triangle(const ParamTuple& pt) {
  ParamResult r;
  if (pt.w4 == 0) return r;
  const Checked pos = ck(pt.beta) * ck(pt.alpha) * ck(pt.w1) * ck(pt.w1);
  const Checked neg = ck(pt.gamma) * ck(pt.gamma) * ck(pt.s) * ck(pt.u);
  if (!pos.ok || !neg.ok) return r;
  if (pos.v <= neg.v) {
    r.status = ParamStatus::NonPositive;
    return r;
  }
  const Checked bw1v = ck(pt.beta) * ck(pt.w1) * ck(pt.v);
  const Checked gst = ck(pt.gamma) * ck(pt.s) * ck(pt.t);
  const Checked aw1t = ck(pt.alpha) * ck(pt.w1) * ck(pt.t);
  const Checked guv = ck(pt.gamma) * ck(pt.u) * ck(pt.v);
  const Checked na = ck(pt.p) * ck(pt.alpha) * ck(pt.u) * (bw1v * bw1v + gst * gst);
  const Checked nb = ck(pt.p) * ck(pt.beta) * ck(pt.s) * (aw1t * aw1t + guv * guv);
  const Checked sum =
      ck(pt.beta) * ck(pt.u) * ck(pt.v) * ck(pt.v) + ck(pt.alpha) * ck(pt.s) * ck(pt.t) * ck(pt.t);
  const Checked nc = ck(pt.p) * sum * Checked{pos.v - neg.v};
  if (!na.ok || !nb.ok || !nc.ok) return r;
  if (na.v % pt.w4 != 0 || nb.v % pt.w4 != 0 || nc.v % pt.w4 != 0) {
    r.status = ParamStatus::NonIntegral;
    return r;
  }
  const u128 a = na.v / pt.w4, b = nb.v / pt.w4, c = nc.v / pt.w4;
  const u128 limit = u64{1} << 62;
  if (a > limit || b > limit || c > limit) return r;
  r.a = static_cast<u64>(a);
  r.b = static_cast<u64>(b);
  r.c = static_cast<u64>(c);
  const u64 big = std::max({r.a, r.b, r.c});
  r.status = (r.a + r.b + r.c > 2 * big) ? ParamStatus::Ok : ParamStatus::NotTriangle;
  return r;
}

bool w4_bound_check(const ParamTuple& pt, u64 n) {
  const ParamResult r = param_triangle(pt);
  if (!r.ok()) return false;
  return u128{pt.w4} <= u128{8} * n && (u128{8} * r.c) % pt.w4 == 0;
}

}  // namespace heronian
