#pragma once

// Tetrahedra with integral edges, face areas and volume ("perfect
// pyramids"), Cayley-Menger volumes of simplices, and searches built on a
// Heronian triangle corpus.
//
// Vertex model for the edge tuple (a, b, c, d, e, f):
//   a = P1P2, b = P2P3, c = P1P3, d = P3P4, e = P1P4, f = P2P4
// faces (a,b,c), (a,e,f), (c,d,e), (b,d,f); opposite pairs (a,d), (b,e), (c,f).

#include <array>
#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "heronian/generate.hpp"

namespace heronian {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

struct Tetrahedron {
  u64 a = 0, b = 0, c = 0, d = 0, e = 0, f = 0;

  std::array<u64, 6> edges() const { return {a, b, c, d, e, f}; }
  static Tetrahedron from_edges(const std::array<u64, 6>& x) {
    return {x[0], x[1], x[2], x[3], x[4], x[5]};
  }
  std::array<std::array<u64, 3>, 4> faces() const {
    return {{{a, b, c}, {a, e, f}, {c, d, e}, {b, d, f}}};
  }
  u64 diameter() const;
  u64 gcd() const;
  bool primitive() const { return gcd() == 1; }

  auto operator<=>(const Tetrahedron&) const = default;
};

// Vertex pair (i, j), 0-based, of each edge slot a..f.
inline constexpr std::array<std::array<int, 2>, 6> kEdgeVertices{
    {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {0, 3}, {1, 3}}};

// Strict triangle inequality on every face and a positive Cayley-Menger
// determinant.
bool is_valid_tetrahedron(const Tetrahedron& t);

// Squared edge lengths of an m-simplex, (m+1) x (m+1), row-major.
struct SimplexDistances {
  std::size_t m = 0;
  std::vector<u64> d;

  SimplexDistances() = default;
  explicit SimplexDistances(std::size_t dim) : m(dim), d((dim + 1) * (dim + 1), 0) {}
  u64& at(std::size_t i, std::size_t j) { return d[i * (m + 1) + j]; }
  u64 at(std::size_t i, std::size_t j) const { return d[i * (m + 1) + j]; }
  void set(std::size_t i, std::size_t j, u64 squared) { at(i, j) = at(j, i) = squared; }
};

SimplexDistances simplex_of(const Tetrahedron& t);

// det B for D bordered by (0, 1, ..., 1); exact.
BigInt cm_bordered_determinant(const SimplexDistances& sd);
// V_m^2 = (-1)^(m+1) det B / (2^m (m!)^2). Negative: not embeddable; zero: degenerate.
Rational cm_volume_squared(const SimplexDistances& sd);

// 288 V^2 of a tetrahedron (equal to det B for m = 3), via the doubled Gram
// matrix at P1. Exact in 128 bits while every edge is below 2^19; wider
// inputs go through BigInt.
BigInt tetra_288_volume_squared(const Tetrahedron& t);

struct PerfectPyramid {
  Tetrahedron tet;
  std::array<u64, 4> face_areas{};  // in Tetrahedron::faces() order
  u64 volume = 0;

  u64 surface() const { return face_areas[0] + face_areas[1] + face_areas[2] + face_areas[3]; }
  auto operator<=>(const PerfectPyramid&) const = default;
};

// Present iff all faces are Heronian and the volume is rational and
// positive. Rational volume with integral faces is integral; a violation
// throws std::logic_error.
std::optional<PerfectPyramid> is_perfect_pyramid(const Tetrahedron& t);

// The 24 relabelings induced by vertex permutations.
std::array<Tetrahedron, 24> tetrahedron_orbit(const Tetrahedron& t);
// Lexicographically smallest edge tuple in the orbit.
Tetrahedron canonical_tetrahedron(const Tetrahedron& t);

// One of 1(i), 2(i)..2(v), 3(i)..3(ix), 4(i)..4(vii), 5(i)..5(ii), 6(i).
std::string_view classify_coincidence(const Tetrahedron& t);
// All 25 labels in table order.
std::span<const std::string_view> coincidence_labels();
// A representative equality pattern per label: edges with the same group
// number are equal, e.g. 3(vi) -> {0,1,2,0,1,2}.
std::array<int, 6> coincidence_pattern(std::string_view label);

// x candidates for the sixth edge given two sides of one of its faces.
class PairIndex {
 public:
  using Phi = std::function<u64(u64, u64)>;

  // Buckets L_0..L_{kappa-1}; phi must map into [0, kappa).
  static PairIndex hashed(const Corpus& corpus, u64 kappa, Phi phi);
  // Default kappa = 2^20 with a multiplicative mix.
  static PairIndex hashed(const Corpus& corpus);
  // One exact list per ordered side pair.
  static PairIndex exact(const Corpus& corpus);

  static constexpr u64 kDefaultKappa = u64{1} << 20;
  static u64 default_phi(u64 a, u64 b) { return (a * 2654435761ull + b) % kDefaultKappa; }

  // Sorted list of third sides (bucket list for the hashed backend).
  std::span<const u32> list(u64 a, u64 b) const;
  bool is_exact() const { return exact_; }
  u64 kappa() const { return kappa_; }

 private:
  bool exact_ = false;
  u64 kappa_ = 0;
  Phi phi_;
  std::vector<u64> offsets_;
  std::vector<u32> values_;
  std::unordered_map<u64, std::pair<u64, u64>> exact_ranges_;
};

struct PyramidSearchOptions {
  // Outer loop over d, inclusive; defaults to [1, n].
  std::optional<LoopRange> range;
};

// All perfect pyramids with diameter <= n, canonical, sorted. `corpus`
// must hold every Heronian triangle with diameter <= n.
std::vector<PerfectPyramid> search_perfect_pyramids(u64 n, const Corpus& corpus,
                                                    const PairIndex& index,
                                                    const PyramidSearchOptions& options = {});

enum class EqualKey { Surface, Volume, Both };
std::optional<EqualKey> parse_equal_key(std::string_view text);

struct PyramidGroup {
  u64 surface = 0;
  u64 volume = 0;  // meaningful for Volume and Both keys
  std::vector<PerfectPyramid> members;
};

// Primitive pyramids grouped by key, groups of at least `min_size`,
// ascending key.
std::vector<PyramidGroup> mine_equal_sets(const std::vector<PerfectPyramid>& pyramids, EqualKey key,
                                          std::size_t min_size = 2);

// Entry k-1 is the smallest-key group with at least k members, for k = 1, 2,
// ... until no such group exists.
std::vector<PyramidGroup> minimal_equal_sets(const std::vector<PerfectPyramid>& pyramids, EqualKey key);

struct ApTetrahedron {
  Tetrahedron tet;  // canonical
  Rational volume;
  u32 heronian_faces = 0;
  auto operator<=>(const ApTetrahedron& o) const { return tet <=> o.tet; }
  bool operator==(const ApTetrahedron& o) const { return tet == o.tet; }
};

// Edge multiset {x, x+s, ..., x+5s}, s >= 1, max edge <= n, rational
// positive volume and at least one Heronian face.
std::vector<ApTetrahedron> ap_tetrahedra(u64 n);

enum class SimplexVolume { Positive, Degenerate, Irrational, NotEmbeddable };
std::string_view simplex_volume_name(SimplexVolume v);

struct HigherSimplex {
  SimplexDistances distances;  // edge lengths squared
  std::vector<u64> edges;      // the 10 edge lengths, row-major upper triangle
  SimplexVolume status = SimplexVolume::Irrational;
  Rational volume_squared;
};

// 4-simplices with all edges <= n whose five tetrahedral facets are
// perfect pyramids, sorted by edges. Only m = 4 is supported.
std::vector<HigherSimplex> search_higher_simplices(std::size_t m, u64 n,
                                                   const std::vector<PerfectPyramid>& pyramids);

}  // namespace heronian
