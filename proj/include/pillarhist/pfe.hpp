#ifndef PILLARHIST_PFE_HPP
#define PILLARHIST_PFE_HPP

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "pillarhist/linear_layer.hpp"
#include "pillarhist/mat.hpp"
#include "pillarhist/pillarize.hpp"

namespace pillarhist {

// Point-level decorated input of the baseline encoder. Row i holds
// [x, y, z, r, x_m, y_m, z_m, x_c, y_c, z_c]: the raw point, its offset from
// the mean of the kept points, and its offset from the pillar center
// (vertical midpoint in z). Rows beyond n_real are zero padding.
struct DecoratedPillar {
  PillarIndex pillar_index;
  Mat features;            // n_max x 10
  std::vector<bool> mask;  // true = real point
  std::size_t n_real = 0;
};

constexpr std::size_t kDecoratedChannels = 10;

const std::array<std::string, kDecoratedChannels>& decorated_channel_names();

// One encoded pillar: a D-float feature vector.
struct PillarFeature {
  PillarIndex pillar_index;
  std::vector<float> values;
};

// Builds the n_max x 10 decorated matrix. When the pillar holds more than
// n_max points, the first n_max in cloud order are kept and the mean offset
// is computed over the kept points only.
DecoratedPillar decorate(const Pillar& pillar, const GridConfig& grid,
                         std::size_t n_max);

// Per-channel maximum over masked-true rows. Throws std::invalid_argument
// when no row is real; padding never leaks into the result.
std::vector<float> maxpool_points(const Mat& rows,
                                  const std::vector<bool>& mask);

// decorate -> linear_forward -> maxpool_points. layer.in_dim must be 10.
PillarFeature encode_pfe(const Pillar& pillar, const GridConfig& grid,
                         const LinearLayer& layer, std::size_t n_max);

}  // namespace pillarhist

#endif  // PILLARHIST_PFE_HPP
