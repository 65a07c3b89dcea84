#ifndef PILLARHIST_TYPES_HPP
#define PILLARHIST_TYPES_HPP

#include <cstddef>
#include <string>
#include <vector>

namespace pillarhist {

// One LiDAR return: position in meters, reflectance at raw sensor scale.
struct Point {
  float x = 0.0f;
  float y = 0.0f;
  float z = 0.0f;
  float r = 0.0f;
};

// Ordered point sequence. Every operation downstream iterates points in this
// order, so results are reproducible from the source bytes alone.
struct PointCloud {
  std::vector<Point> points;
  std::string source_id;

  std::size_t size() const { return points.size(); }
  bool empty() const { return points.empty(); }
};

// Scene range and pillar footprint. Range intervals are half-open
// [min, max) on all three axes.
struct GridConfig {
  double x_min = 0.0, x_max = 0.0;
  double y_min = 0.0, y_max = 0.0;
  double z_min = 0.0, z_max = 0.0;
  double dx = 0.0;  // pillar width along x, meters
  double dy = 0.0;  // pillar width along y, meters

  double height() const { return z_max - z_min; }
  double z_mid() const { return 0.5 * (z_min + z_max); }

  // Grid extent in cells.
  std::size_t nx() const;
  std::size_t ny() const;

  // Throws std::invalid_argument when ranges are empty or widths
  // non-positive.
  void validate() const;

  bool contains(const Point& p) const {
    return p.x >= x_min && p.x < x_max && p.y >= y_min && p.y < y_max &&
           p.z >= z_min && p.z < z_max;
  }
};

// 51.2 m square range, 0.2 m pillars, 8 m of height. The standard large-scene
// configuration for 32-beam spinning LiDAR data.
GridConfig nuscenes_grid();

// Forward-facing 69.12 m x 79.36 m range with 0.16 m pillars.
GridConfig kitti_grid();

}  // namespace pillarhist

#endif  // PILLARHIST_TYPES_HPP
