#pragma once

// Statistics over a Heronian corpus: equal perimeter and area groups,
// rational medians, primitive counts.

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "heronian/generate.hpp"

namespace heronian {

struct IncompleteCorpusError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct TupleGroup {
  u64 perimeter = 0;
  u64 area = 0;       // A
  u64 quad_area = 0;  // 4A
  std::vector<HeronianTriangle> members;
};

// Largest perimeter fully covered by a corpus complete to diameter n: a
// triangle of perimeter P has diameter at most (P - 1) / 2.
inline u64 perimeter_closure(u64 n) { return 2 * n + 2; }

// Smallest-perimeter group of at least `count` triangles sharing perimeter
// and area (ties: smaller area). `corpus_n` is the diameter bound the
// corpus is complete to. Throws IncompleteCorpusError when no group exists
// below the closure bound.
TupleGroup minimal_tuples(const Corpus& corpus, u64 corpus_n, std::size_t count);

// All groups of size >= 2 within the closure bound, by (perimeter, area).
std::vector<TupleGroup> equal_perimeter_area_groups(const Corpus& corpus, u64 corpus_n);

struct MedianReport {
  // Twice the median to sides a, b, c when rational.
  std::array<std::optional<u64>, 3> doubled{};
  int count() const;
};

// m_a = sqrt(2b^2 + 2c^2 - a^2) / 2 and cyclically.
MedianReport rational_medians(const HeronianTriangle& t);

struct DiameterCount {
  u64 total = 0;
  u64 primitive = 0;
  bool operator==(const DiameterCount&) const = default;
};

struct CorpusStats {
  u64 total = 0;
  u64 primitive = 0;
  std::map<u64, DiameterCount> per_diameter;
};

CorpusStats corpus_stats(const Corpus& corpus);

}  // namespace heronian
