#include "pillarhist/synthetic.hpp"

#include "pillarhist/rng.hpp"

namespace pillarhist {

PointCloud synthetic_scene(std::uint64_t seed, std::size_t n_points,
                           const GridConfig& grid, double r_max) {
  grid.validate();
  PointCloud cloud;
  cloud.source_id = "synthetic:" + std::to_string(seed);
  cloud.points.reserve(n_points);
  for (std::size_t i = 0; i < n_points; ++i) {
    Point p;
    p.x = static_cast<float>(uniform_at(seed, i, 0, grid.x_min, grid.x_max));
    p.y = static_cast<float>(uniform_at(seed, i, 1, grid.y_min, grid.y_max));
    p.z = static_cast<float>(uniform_at(seed, i, 2, grid.z_min, grid.z_max));
    p.r = static_cast<float>(uniform_at(seed, i, 3, 0.0, r_max));
    cloud.points.push_back(p);
  }
  return cloud;
}

}  // namespace pillarhist
