#pragma once

// Planar lattice point sets: integral distances, collinear triples and
// concyclic quadruples. Reports index points from 1.

#include <array>
#include <istream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "heronian/wide.hpp"

namespace heronian {

struct Point {
  i64 x = 0, y = 0;
  auto operator<=>(const Point&) const = default;
};

class LatticePointSet {
 public:
  // Throws std::invalid_argument on a repeated point.
  explicit LatticePointSet(std::vector<Point> points);

  const std::vector<Point>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  const Point& operator[](std::size_t i) const { return points_[i]; }

 private:
  std::vector<Point> points_;
};

u128 squared_distance(const Point& p, const Point& q);
std::optional<u64> integral_distance(const Point& p, const Point& q);
bool collinear(const Point& p, const Point& q, const Point& r);
// Throws std::domain_error if three of the points are collinear.
bool concyclic(const Point& p, const Point& q, const Point& r, const Point& s);

struct ClusterReport {
  std::vector<std::array<std::size_t, 2>> non_integral_pairs;
  std::vector<std::array<std::size_t, 3>> collinear_triples;
  // Quadruples containing a collinear triple are not tested.
  std::vector<std::array<std::size_t, 4>> concyclic_quadruples;
  // Row-major; nullopt where the distance is irrational.
  std::vector<std::vector<std::optional<u64>>> distance_matrix;

  bool is_cluster() const {
    return non_integral_pairs.empty() && collinear_triples.empty() && concyclic_quadruples.empty();
  }
};

ClusterReport verify_cluster(const LatticePointSet& ps);

struct PointParseError : std::runtime_error {
  PointParseError(std::size_t line, const std::string& what);
  std::size_t line;
};

// One `x y` pair per line; blank lines and `#` comments are skipped.
LatticePointSet parse_points(std::istream& in);

}  // namespace heronian
