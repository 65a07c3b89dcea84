#ifndef PILLARHIST_HIST_ENCODER_HPP
#define PILLARHIST_HIST_ENCODER_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "pillarhist/pfe.hpp"
#include "pillarhist/pillarize.hpp"

namespace pillarhist {

struct HistConfig {
  std::size_t n_bins = 64;       // B
  std::size_t out_dim = 64;      // D
  double intensity_scale = 1.0;  // divisor applied to r before accumulation

  std::size_t concat_len() const { return 2 * n_bins + 2; }
  void validate() const;
};

// Height-histogram features of one pillar: per-bin point counts, per-bin
// mean intensity (0 where the bin is empty), and the pillar center. The
// concatenated vector [hp | hi | x_center | y_center] has length 2B + 2.
struct HistFeature {
  PillarIndex pillar_index;
  std::vector<std::uint64_t> hp;  // exact point counts
  std::vector<double> hi;         // mean intensity per bin
  double x_center = 0.0;
  double y_center = 0.0;

  std::vector<float> concat() const;
};

const std::vector<std::string>& hist_channel_names(std::size_t n_bins);

// Bins each point by floor((z - z_min) / h) with h = height / B, clamping to
// bin B-1 at the top edge. Intensity sums accumulate in pillar point order.
// Throws std::invalid_argument on an empty pillar.
HistFeature hist_encode(const Pillar& pillar, const GridConfig& grid,
                        const HistConfig& cfg);

// Projects the concatenated vector through the layer (in_dim must be 2B+2).
PillarFeature hist_project(const HistFeature& feat, const LinearLayer& layer);

PillarFeature encode_pillarhist(const Pillar& pillar, const GridConfig& grid,
                                const HistConfig& cfg,
                                const LinearLayer& layer);

}  // namespace pillarhist

#endif  // PILLARHIST_HIST_ENCODER_HPP
