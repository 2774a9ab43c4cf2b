#include "heronian/geometry.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include <boost/multiprecision/cpp_int.hpp>

#include "heronian/numtheory.hpp"

namespace heronian {

LatticePointSet::LatticePointSet(std::vector<Point> points) : points_(std::move(points)) {
  std::vector<Point> sorted = points_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("point set contains a repeated point");
}

u128 squared_distance(const Point& p, const Point& q) {
  const i128 dx = i128{p.x} - q.x, dy = i128{p.y} - q.y;
  return static_cast<u128>(dx * dx + dy * dy);
}

std::optional<u64> integral_distance(const Point& p, const Point& q) {
  if (p == q) return std::nullopt;
  return nt::perfect_square_root(squared_distance(p, q));
}

bool collinear(const Point& p, const Point& q, const Point& r) {
  const i128 cross = (i128{q.x} - p.x) * (i128{r.y} - p.y) - (i128{q.y} - p.y) * (i128{r.x} - p.x);
  return cross == 0;
}

bool concyclic(const Point& p, const Point& q, const Point& r, const Point& s) {
  if (collinear(p, q, r) || collinear(p, q, s) || collinear(p, r, s) || collinear(q, r, s))
    throw std::domain_error("concyclic: three of the points are collinear");
  using boost::multiprecision::cpp_int;
  // Rows (x, y, x^2 + y^2, 1) translated so that p is the origin; the
  // determinant reduces to 3x3.
  const std::array<const Point*, 3> rest{&q, &r, &s};
  cpp_int m[3][3];
  for (int i = 0; i < 3; ++i) {
    const cpp_int dx = cpp_int(rest[i]->x) - p.x, dy = cpp_int(rest[i]->y) - p.y;
    m[i][0] = dx;
    m[i][1] = dy;
    m[i][2] = dx * dx + dy * dy;
  }
  const cpp_int det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                      m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                      m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  return det == 0;
}

ClusterReport verify_cluster(const LatticePointSet& ps) {
  ClusterReport rep;
  const std::size_t n = ps.size();
  rep.distance_matrix.assign(n, std::vector<std::optional<u64>>(n));
  for (std::size_t i = 0; i < n; ++i) {
    rep.distance_matrix[i][i] = 0;
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto d = integral_distance(ps[i], ps[j]);
      rep.distance_matrix[i][j] = rep.distance_matrix[j][i] = d;
      if (!d) rep.non_integral_pairs.push_back({i + 1, j + 1});
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k)
        if (collinear(ps[i], ps[j], ps[k])) rep.collinear_triples.push_back({i + 1, j + 1, k + 1});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k)
        for (std::size_t l = k + 1; l < n; ++l) {
          const Point &p = ps[i], &q = ps[j], &r = ps[k], &s = ps[l];
          if (collinear(p, q, r) || collinear(p, q, s) || collinear(p, r, s) || collinear(q, r, s))
            continue;
          if (concyclic(p, q, r, s)) rep.concyclic_quadruples.push_back({i + 1, j + 1, k + 1, l + 1});
        }
  return rep;
}

PointParseError::PointParseError(std::size_t l, const std::string& what)
    : std::runtime_error("line " + std::to_string(l) + ": " + what), line(l) {}

LatticePointSet parse_points(std::istream& in) {
  std::vector<Point> points;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string xs, ys, extra;
    if (!(fields >> xs)) continue;
    if (!(fields >> ys) || (fields >> extra)) throw PointParseError(number, "expected `x y`");
    Point p;
    for (auto [text, out] : {std::pair{&xs, &p.x}, std::pair{&ys, &p.y}}) {
      const char* end = text->data() + text->size();
      const auto res = std::from_chars(text->data(), end, *out);
      if (res.ec != std::errc{} || res.ptr != end)
        throw PointParseError(number, "not an integer: " + *text);
    }
    points.push_back(p);
  }
  try {
    return LatticePointSet(std::move(points));
  } catch (const std::invalid_argument& e) {
    throw PointParseError(number, e.what());
  }
}

}  // namespace heronian
