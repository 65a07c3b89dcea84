#include "pillarhist/pillarize.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>

namespace pillarhist {

PillarIndex pillar_index_of(const Point& p, const GridConfig& grid) {
  grid.validate();
  if (!grid.contains(p)) {
    throw std::invalid_argument("pillar_index_of: point outside grid range");
  }
  const std::size_t nx = grid.nx();
  const std::size_t ny = grid.ny();
  auto cell = [](double v, double lo, double width, std::size_t n) {
    auto i = static_cast<std::size_t>(std::floor((v - lo) / width));
    // An in-range coordinate a hair below the upper bound can round up to n.
    return std::min(i, n - 1);
  };
  return PillarIndex{cell(p.x, grid.x_min, grid.dx, nx),
                     cell(p.y, grid.y_min, grid.dy, ny)};
}

std::vector<Pillar> pillarize(const PointCloud& cloud, const GridConfig& grid) {
  grid.validate();
  const std::uint64_t nx = grid.nx();

  // Group point positions by flattened cell key, preserving cloud order.
  std::unordered_map<std::uint64_t, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < cloud.points.size(); ++i) {
    const Point& p = cloud.points[i];
    if (!grid.contains(p)) continue;
    const PillarIndex idx = pillar_index_of(p, grid);
    groups[static_cast<std::uint64_t>(idx.iy) * nx + idx.ix].push_back(i);
  }

  std::vector<std::uint64_t> keys;
  keys.reserve(groups.size());
  for (const auto& [key, members] : groups) keys.push_back(key);
  std::sort(keys.begin(), keys.end());  // key order == (iy, ix) order

  std::vector<Pillar> pillars;
  pillars.reserve(keys.size());
  for (std::uint64_t key : keys) {
    Pillar pillar;
    pillar.index = PillarIndex{static_cast<std::size_t>(key % nx),
                               static_cast<std::size_t>(key / nx)};
    pillar.x_center =
        grid.x_min + (static_cast<double>(pillar.index.ix) + 0.5) * grid.dx;
    pillar.y_center =
        grid.y_min + (static_cast<double>(pillar.index.iy) + 0.5) * grid.dy;
    const auto& members = groups[key];
    pillar.points.reserve(members.size());
    for (std::size_t i : members) pillar.points.push_back(cloud.points[i]);
    pillars.push_back(std::move(pillar));
  }
  return pillars;
}

}  // namespace pillarhist
