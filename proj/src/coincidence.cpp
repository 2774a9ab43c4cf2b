#include <algorithm>
#include <map>
#include <stdexcept>

#include "heronian/pyramid.hpp"

namespace heronian {

namespace {

struct LabelSpec {
  std::string_view label;
  std::string_view equalities;  // groups separated by ',', members joined by '='
};

// 2(iii) is printed as "a=c=d=f,b,e", which repeats 3(ii) and has three
// parameters; the two-parameter class it stands for is a=c=d=f, b=e.
constexpr std::array<LabelSpec, 25> kTable{{
    {"1(i)", "a=b=c=d=e=f"},
    {"2(i)", "a=b=c=d=e,f"},
    {"2(ii)", "a=b=c=d,e=f"},
    {"2(iii)", "a=c=d=f,b=e"},
    {"2(iv)", "a=b=c,d=e=f"},
    {"2(v)", "a=d=f,b=c=e"},
    {"3(i)", "a=b=c=d,e,f"},
    {"3(ii)", "a=c=d=f,b,e"},
    {"3(iii)", "a=b=c,d=e,f"},
    {"3(iv)", "a=d=f,b=c,e"},
    {"3(v)", "a=d=f,b=e,c"},
    {"3(vi)", "a=d,b=e,c=f"},
    {"3(vii)", "a=e,b=f,c=d"},
    {"3(viii)", "a=b,c,d=e=f"},
    {"3(ix)", "a=d,b=f,c=e"},
    {"4(i)", "a=b=c,d,e,f"},
    {"4(ii)", "a=b=d,c,e,f"},
    {"4(iii)", "a=b=f,c,d,e"},
    {"4(iv)", "a=d,b=e,c,f"},
    {"4(v)", "a=d,b=f,c,e"},
    {"4(vi)", "a=b,d=f,c,e"},
    {"4(vii)", "a=b,d=e,c,f"},
    {"5(i)", "a=d,b,c,e,f"},
    {"5(ii)", "a=b,c,d,e,f"},
    {"6(i)", "a,b,c,d,e,f"},
}};

// Group numbers renumbered by first occurrence.
using Pattern = std::array<int, 6>;

Pattern normalize(const Pattern& p) {
  Pattern out{};
  std::array<int, 7> map;
  map.fill(-1);
  int next = 0;
  for (int k = 0; k < 6; ++k) {
    if (map[p[k]] < 0) map[p[k]] = next++;
    out[k] = map[p[k]];
  }
  return out;
}

Pattern parse(std::string_view text) {
  Pattern p;
  p.fill(-1);
  int group = 0;
  for (char ch : text) {
    if (ch == ',') {
      ++group;
    } else if (ch >= 'a' && ch <= 'f') {
      p[ch - 'a'] = group;
    }
  }
  if (std::count(p.begin(), p.end(), -1) != 0) throw std::logic_error("bad coincidence spec");
  return normalize(p);
}

// Smallest normalized pattern over the 24 relabelings.
Pattern orbit_key(const Pattern& p) {
  Tetrahedron t = Tetrahedron::from_edges({u64(p[0]), u64(p[1]), u64(p[2]), u64(p[3]), u64(p[4]), u64(p[5])});
  Pattern best;
  best.fill(99);
  for (const auto& r : tetrahedron_orbit(t)) {
    const auto x = r.edges();
    best = std::min(best, normalize({int(x[0]), int(x[1]), int(x[2]), int(x[3]), int(x[4]), int(x[5])}));
  }
  return best;
}

const std::map<Pattern, std::string_view>& label_map() {
  static const auto m = [] {
    std::map<Pattern, std::string_view> out;
    for (const auto& spec : kTable)
      if (!out.emplace(orbit_key(parse(spec.equalities)), spec.label).second)
        throw std::logic_error("coincidence table has two labels for one class");
    return out;
  }();
  return m;
}

const std::array<std::string_view, 25>& labels() {
  static const auto out = [] {
    std::array<std::string_view, 25> l;
    for (std::size_t i = 0; i < kTable.size(); ++i) l[i] = kTable[i].label;
    return l;
  }();
  return out;
}

}  // namespace

std::string_view classify_coincidence(const Tetrahedron& t) {
  const auto x = t.edges();
  Pattern p{};
  for (int k = 0; k < 6; ++k)
    p[k] = static_cast<int>(std::find(x.begin(), x.end(), x[k]) - x.begin());
  const auto& m = label_map();
  const auto it = m.find(orbit_key(normalize(p)));
  if (it == m.end()) throw std::logic_error("equality pattern missing from the coincidence table");
  return it->second;
}

std::span<const std::string_view> coincidence_labels() { return labels(); }

std::array<int, 6> coincidence_pattern(std::string_view label) {
  for (const auto& spec : kTable)
    if (spec.label == label) return parse(spec.equalities);
  throw std::invalid_argument("unknown coincidence label");
}

}  // namespace heronian
