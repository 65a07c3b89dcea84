#include "pillarhist/types.hpp"

#include <cmath>
#include <stdexcept>

namespace pillarhist {

std::size_t GridConfig::nx() const {
  return static_cast<std::size_t>(std::ceil((x_max - x_min) / dx));
}

std::size_t GridConfig::ny() const {
  return static_cast<std::size_t>(std::ceil((y_max - y_min) / dy));
}

void GridConfig::validate() const {
  if (!(x_min < x_max) || !(y_min < y_max) || !(z_min < z_max)) {
    throw std::invalid_argument("grid: range must satisfy min < max on all axes");
  }
  if (!(dx > 0.0) || !(dy > 0.0)) {
    throw std::invalid_argument("grid: pillar widths dx, dy must be positive");
  }
}

GridConfig nuscenes_grid() {
  return GridConfig{-51.2, 51.2, -51.2, 51.2, -5.0, 3.0, 0.2, 0.2};
}

GridConfig kitti_grid() {
  return GridConfig{0.0, 69.12, -39.68, 39.68, -3.0, 1.0, 0.16, 0.16};
}

}  // namespace pillarhist
