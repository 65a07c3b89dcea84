#ifndef PILLARHIST_PILLARIZE_HPP
#define PILLARHIST_PILLARIZE_HPP

#include <cstddef>
#include <vector>

#include "pillarhist/types.hpp"

namespace pillarhist {

struct PillarIndex {
  std::size_t ix = 0;  // grid column
  std::size_t iy = 0;  // grid row

  bool operator==(const PillarIndex&) const = default;
};

// A non-empty XY grid cell: its member points in original cloud order and
// the cell center in meters.
struct Pillar {
  PillarIndex index;
  std::vector<Point> points;
  double x_center = 0.0;
  double y_center = 0.0;

  std::size_t size() const { return points.size(); }
};

// Floor of the range-shifted coordinates. Throws std::invalid_argument when
// the point lies outside the grid's half-open range.
PillarIndex pillar_index_of(const Point& p, const GridConfig& grid);

// Groups the in-range points of `cloud` into non-empty pillars. Out-of-range
// points are dropped. Output is sorted by (iy, ix) ascending; within a
// pillar, points keep their cloud order.
std::vector<Pillar> pillarize(const PointCloud& cloud, const GridConfig& grid);

}  // namespace pillarhist

#endif  // PILLARHIST_PILLARIZE_HPP
