#include "heronian/analysis.hpp"

#include <algorithm>
#include <string>

#include "heronian/numtheory.hpp"

namespace heronian {

std::vector<TupleGroup> equal_perimeter_area_groups(const Corpus& corpus, u64 corpus_n) {
  const u64 closure = perimeter_closure(corpus_n);
  std::map<std::pair<u64, u64>, std::vector<HeronianTriangle>> by_key;
  for (const auto& h : corpus) {
    const u64 p = h.tri.perimeter();
    if (p > closure) continue;
    by_key[{p, h.quad_area}].push_back(h);
  }
  std::vector<TupleGroup> out;
  for (auto& [key, members] : by_key) {
    if (members.size() < 2) continue;
    out.push_back({key.first, key.second / 4, key.second, std::move(members)});
  }
  return out;
}

TupleGroup minimal_tuples(const Corpus& corpus, u64 corpus_n, std::size_t count) {
  if (count == 0) throw std::invalid_argument("tuple size must be positive");
  const u64 closure = perimeter_closure(corpus_n);
  std::map<std::pair<u64, u64>, std::vector<HeronianTriangle>> by_key;
  for (const auto& h : corpus) {
    const u64 p = h.tri.perimeter();
    if (p <= closure) by_key[{p, h.quad_area}].push_back(h);
  }
  // Map order is (perimeter, area), so the first hit is the answer.
  for (auto& [key, members] : by_key)
    if (members.size() >= count) return {key.first, key.second / 4, key.second, std::move(members)};
  throw IncompleteCorpusError("no " + std::to_string(count) + "-tuple with perimeter <= " +
                              std::to_string(closure) + "; regenerate with a larger n");
}

int MedianReport::count() const {
  return static_cast<int>(std::count_if(doubled.begin(), doubled.end(), [](const auto& m) { return m.has_value(); }));
}

MedianReport rational_medians(const HeronianTriangle& t) {
  const std::array<u64, 3> s{t.tri.a(), t.tri.b(), t.tri.c()};
  MedianReport rep;
  for (int k = 0; k < 3; ++k) {
    const i128 x = s[k], y = s[(k + 1) % 3], z = s[(k + 2) % 3];
    const i128 v = 2 * y * y + 2 * z * z - x * x;
    if (v > 0) rep.doubled[k] = nt::perfect_square_root(static_cast<u128>(v));
  }
  return rep;
}

CorpusStats corpus_stats(const Corpus& corpus) {
  CorpusStats st;
  for (const auto& h : corpus) {
    const bool prim = h.primitive();
    ++st.total;
    st.primitive += prim;
    auto& d = st.per_diameter[h.tri.diameter()];
    ++d.total;
    d.primitive += prim;
  }
  return st;
}

}  // namespace heronian
