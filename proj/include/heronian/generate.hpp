#pragma once

// Enumeration of all integer Heronian triangles with diameter <= n by three
// independent routes, plus merge and cross-validation.
//
//   I   loops over a and the denominator part w4 of the ten-parameter form;
//   II  loops over m = 4A and splits m^2 = (p-c)(p+c)(c-q)(c+q) with
//       p = a+b, q = a-b;
//   III loops over canonical side triples, screened mod 420 and decided by
//       squarefree parts.

#include <chrono>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "heronian/heron.hpp"

namespace heronian {

enum class Algorithm { I, II, III };

std::string_view algorithm_name(Algorithm alg);
std::optional<Algorithm> parse_algorithm(std::string_view text);

// Sorted by (a, b, c), duplicate free.
using Corpus = std::vector<HeronianTriangle>;

// Closed interval of the outer loop variable (a for I and III, m for II).
struct LoopRange {
  u64 first = 0;
  u64 last = 0;
};

// Full outer-loop range of an algorithm at diameter bound n.
LoopRange outer_range(Algorithm alg, u64 n);
// Splits `full` into `count` contiguous shards; shard `index` of them.
LoopRange shard_range(LoopRange full, u64 count, u64 index);

// Observer for every accepted Algorithm I parameter state.
using ParamObserver = std::function<void(const ParamTuple&, const ParamResult&)>;

Corpus generate_algorithm_i(u64 n, std::optional<LoopRange> range = std::nullopt,
                            const ParamObserver& observer = {});
Corpus generate_algorithm_ii(u64 n, std::optional<LoopRange> range = std::nullopt);
Corpus generate_algorithm_iii(u64 n, std::optional<LoopRange> range = std::nullopt);

Corpus generate(Algorithm alg, u64 n, std::optional<LoopRange> range = std::nullopt);

// Set union of shard outputs, sorted.
Corpus merge_corpora(std::vector<Corpus> parts);

// Number of canonical integer triples (a >= b >= c, b + c > a, a <= n).
u128 count_integer_triangles(u64 n);

// Non-equilateral integer triangles with even perimeter <= max_perimeter:
// the pool left for a Heronian check once odd perimeters (never Heronian)
// and equilateral triangles (never Heronian) are dropped.
u128 count_even_perimeter_triangles(u64 max_perimeter);

struct AlgorithmRun {
  Algorithm algorithm;
  u64 total = 0;
  u64 primitive = 0;
  double seconds = 0;
};

struct CrossValidationReport {
  u64 n = 0;
  std::vector<AlgorithmRun> runs;
  bool consistent = true;
  // First triangle present in one output and missing from another.
  std::string first_difference;
  Corpus reference;  // Algorithm III output
};

CrossValidationReport cross_validate(u64 n);

}  // namespace heronian
