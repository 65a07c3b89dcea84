#include "pillarhist/pfe.hpp"

#include <algorithm>
#include <stdexcept>

namespace pillarhist {

const std::array<std::string, kDecoratedChannels>& decorated_channel_names() {
  static const std::array<std::string, kDecoratedChannels> names = {
      "x", "y", "z", "r", "x_m", "y_m", "z_m", "x_c", "y_c", "z_c"};
  return names;
}

DecoratedPillar decorate(const Pillar& pillar, const GridConfig& grid,
                         std::size_t n_max) {
  if (n_max == 0) {
    throw std::invalid_argument("decorate: n_max must be at least 1");
  }
  const std::size_t n_real = std::min(pillar.points.size(), n_max);

  double mean_x = 0.0, mean_y = 0.0, mean_z = 0.0;
  for (std::size_t i = 0; i < n_real; ++i) {
    mean_x += pillar.points[i].x;
    mean_y += pillar.points[i].y;
    mean_z += pillar.points[i].z;
  }
  if (n_real > 0) {
    mean_x /= static_cast<double>(n_real);
    mean_y /= static_cast<double>(n_real);
    mean_z /= static_cast<double>(n_real);
  }

  const double z_mid = grid.z_mid();

  DecoratedPillar out;
  out.pillar_index = pillar.index;
  out.features = Mat(n_max, kDecoratedChannels);
  out.mask.assign(n_max, false);
  out.n_real = n_real;
  for (std::size_t i = 0; i < n_real; ++i) {
    const Point& p = pillar.points[i];
    auto row = out.features.row(i);
    row[0] = p.x;
    row[1] = p.y;
    row[2] = p.z;
    row[3] = p.r;
    row[4] = static_cast<float>(p.x - mean_x);
    row[5] = static_cast<float>(p.y - mean_y);
    row[6] = static_cast<float>(p.z - mean_z);
    row[7] = static_cast<float>(p.x - pillar.x_center);
    row[8] = static_cast<float>(p.y - pillar.y_center);
    row[9] = static_cast<float>(p.z - z_mid);
    out.mask[i] = true;
  }
  return out;
}

std::vector<float> maxpool_points(const Mat& rows,
                                  const std::vector<bool>& mask) {
  if (mask.size() != rows.rows) {
    throw std::invalid_argument("maxpool_points: mask size mismatch");
  }
  std::vector<float> out;
  bool any = false;
  for (std::size_t i = 0; i < rows.rows; ++i) {
    if (!mask[i]) continue;
    auto row = rows.row(i);
    if (!any) {
      out.assign(row.begin(), row.end());
      any = true;
    } else {
      for (std::size_t c = 0; c < rows.cols; ++c) {
        out[c] = std::max(out[c], row[c]);
      }
    }
  }
  if (!any) {
    throw std::invalid_argument("maxpool_points: no real rows to pool");
  }
  return out;
}

PillarFeature encode_pfe(const Pillar& pillar, const GridConfig& grid,
                         const LinearLayer& layer, std::size_t n_max) {
  if (layer.in_dim != kDecoratedChannels) {
    throw std::invalid_argument("encode_pfe: layer.in_dim must be 10");
  }
  DecoratedPillar dec = decorate(pillar, grid, n_max);
  Mat mapped = linear_forward(layer, dec.features);
  return PillarFeature{pillar.index, maxpool_points(mapped, dec.mask)};
}

}  // namespace pillarhist
