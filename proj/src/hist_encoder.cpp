#include "pillarhist/hist_encoder.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

namespace pillarhist {

void HistConfig::validate() const {
  if (n_bins < 1) throw std::invalid_argument("hist: n_bins must be >= 1");
  if (out_dim < 1) throw std::invalid_argument("hist: out_dim must be >= 1");
  if (!(intensity_scale > 0.0)) {
    throw std::invalid_argument("hist: intensity_scale must be positive");
  }
}

std::vector<float> HistFeature::concat() const {
  std::vector<float> v;
  v.reserve(hp.size() + hi.size() + 2);
  for (std::uint64_t c : hp) v.push_back(static_cast<float>(c));
  for (double m : hi) v.push_back(static_cast<float>(m));
  v.push_back(static_cast<float>(x_center));
  v.push_back(static_cast<float>(y_center));
  return v;
}

const std::vector<std::string>& hist_channel_names(std::size_t n_bins) {
  static std::mutex mu;
  static std::unordered_map<std::size_t, std::vector<std::string>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n_bins);
  if (it != cache.end()) return it->second;

  std::vector<std::string> names;
  names.reserve(2 * n_bins + 2);
  for (std::size_t b = 0; b < n_bins; ++b) names.push_back("hp[" + std::to_string(b) + "]");
  for (std::size_t b = 0; b < n_bins; ++b) names.push_back("hi[" + std::to_string(b) + "]");
  names.push_back("x_center");
  names.push_back("y_center");
  return cache.emplace(n_bins, std::move(names)).first->second;
}

HistFeature hist_encode(const Pillar& pillar, const GridConfig& grid,
                        const HistConfig& cfg) {
  grid.validate();
  cfg.validate();
  if (pillar.points.empty()) {
    throw std::invalid_argument("hist_encode: pillar has no points");
  }

  const std::size_t n_bins = cfg.n_bins;
  const double h = grid.height() / static_cast<double>(n_bins);

  HistFeature feat;
  feat.pillar_index = pillar.index;
  feat.hp.assign(n_bins, 0);
  feat.hi.assign(n_bins, 0.0);
  feat.x_center = pillar.x_center;
  feat.y_center = pillar.y_center;

  for (const Point& p : pillar.points) {
    double bf = std::floor((static_cast<double>(p.z) - grid.z_min) / h);
    if (bf < 0.0) bf = 0.0;
    std::size_t b = static_cast<std::size_t>(bf);
    if (b >= n_bins) b = n_bins - 1;  // z == z_max clamps into the top bin
    feat.hp[b] += 1;
    feat.hi[b] += static_cast<double>(p.r);
  }
  for (std::size_t b = 0; b < n_bins; ++b) {
    if (feat.hp[b] != 0) {
      feat.hi[b] /= static_cast<double>(feat.hp[b]) * cfg.intensity_scale;
    }
  }
  return feat;
}

PillarFeature hist_project(const HistFeature& feat, const LinearLayer& layer) {
  const std::vector<float> v = feat.concat();
  if (layer.in_dim != v.size()) {
    throw std::invalid_argument("hist_project: layer.in_dim must be 2B+2 = " +
                                std::to_string(v.size()));
  }
  return PillarFeature{feat.pillar_index, linear_forward(layer, v)};
}

PillarFeature encode_pillarhist(const Pillar& pillar, const GridConfig& grid,
                                const HistConfig& cfg,
                                const LinearLayer& layer) {
  return hist_project(hist_encode(pillar, grid, cfg), layer);
}

}  // namespace pillarhist
