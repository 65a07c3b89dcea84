// Independent reference implementations used only by tests. Each oracle
// re-derives its result with the most literal method available (brute-force
// scans, naive loops) and must stay decoupled from the library code paths it
// checks.
#ifndef PILLARHIST_TEST_ORACLES_HPP
#define PILLARHIST_TEST_ORACLES_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <utility>
#include <vector>

#include "pillarhist/mat.hpp"
#include "pillarhist/pillarize.hpp"
#include "pillarhist/types.hpp"

namespace oracles {

using pillarhist::GridConfig;
using pillarhist::Mat;
using pillarhist::Pillar;
using pillarhist::Point;
using pillarhist::PointCloud;

// Per-point bound check, no shared helpers.
inline PointCloud brute_filter(const PointCloud& cloud, const GridConfig& g) {
  PointCloud out;
  for (const Point& p : cloud.points) {
    if (p.x >= g.x_min && p.x < g.x_max && p.y >= g.y_min && p.y < g.y_max &&
        p.z >= g.z_min && p.z < g.z_max) {
      out.points.push_back(p);
    }
  }
  return out;
}

// Exhaustive containment scan over every grid cell. Returns std::nullopt
// when no cell contains the point.
inline std::optional<std::pair<std::size_t, std::size_t>> containment_index(
    const Point& p, const GridConfig& g) {
  const auto nx = static_cast<std::size_t>(std::ceil((g.x_max - g.x_min) / g.dx));
  const auto ny = static_cast<std::size_t>(std::ceil((g.y_max - g.y_min) / g.dy));
  for (std::size_t iy = 0; iy < ny; ++iy) {
    const double y_lo = g.y_min + static_cast<double>(iy) * g.dy;
    const double y_hi = g.y_min + static_cast<double>(iy + 1) * g.dy;
    if (!(p.y >= y_lo && p.y < y_hi)) continue;
    for (std::size_t ix = 0; ix < nx; ++ix) {
      const double x_lo = g.x_min + static_cast<double>(ix) * g.dx;
      const double x_hi = g.x_min + static_cast<double>(ix + 1) * g.dx;
      if (p.x >= x_lo && p.x < x_hi) return std::make_pair(ix, iy);
    }
  }
  return std::nullopt;
}

// Naive dense matmul: out[r] = bias[r] + sum_c w[r][c] * x[c], plain loops.
inline std::vector<double> naive_matmul(const std::vector<float>& weights,
                                        const std::vector<float>& bias,
                                        const std::vector<float>& x) {
  const std::size_t out_dim = bias.size();
  const std::size_t in_dim = x.size();
  std::vector<double> out(out_dim, 0.0);
  for (std::size_t r = 0; r < out_dim; ++r) {
    double acc = bias[r];
    for (std::size_t c = 0; c < in_dim; ++c) {
      acc += static_cast<double>(weights[r * in_dim + c]) *
             static_cast<double>(x[c]);
    }
    out[r] = acc;
  }
  return out;
}

// Brute-force masked per-column maximum.
inline std::vector<float> masked_colmax(const Mat& rows,
                                        const std::vector<bool>& mask) {
  std::vector<float> out(rows.cols, -std::numeric_limits<float>::infinity());
  for (std::size_t i = 0; i < rows.rows; ++i) {
    if (!mask[i]) continue;
    for (std::size_t c = 0; c < rows.cols; ++c) {
      out[c] = std::max(out[c], rows.at(i, c));
    }
  }
  return out;
}

// O(N*B) histogram: tests each point against each bin interval
// [z_min + b*h, z_min + (b+1)*h); anything at or above the top edge lands
// in the last bin.
struct HistOracleResult {
  std::vector<std::uint64_t> hp;
  std::vector<double> hi;
};

inline HistOracleResult interval_hist(const Pillar& pillar,
                                      const GridConfig& g, std::size_t n_bins,
                                      double intensity_scale) {
  const double h = (g.z_max - g.z_min) / static_cast<double>(n_bins);
  HistOracleResult res;
  res.hp.assign(n_bins, 0);
  res.hi.assign(n_bins, 0.0);
  for (std::size_t b = 0; b < n_bins; ++b) {
    const double lo = g.z_min + static_cast<double>(b) * h;
    const double hi_edge = g.z_min + static_cast<double>(b + 1) * h;
    for (const Point& p : pillar.points) {
      const double z = p.z;
      const bool inside = (b + 1 == n_bins) ? (z >= lo) : (z >= lo && z < hi_edge);
      if (inside && z >= g.z_min) {
        res.hp[b] += 1;
        res.hi[b] += static_cast<double>(p.r);
      }
    }
    if (res.hp[b] != 0) {
      res.hi[b] /= static_cast<double>(res.hp[b]) * intensity_scale;
    }
  }
  return res;
}

// Reference scalar quantize-dequantize (round half to even).
inline double quant_ref(double x, double s, int z, int q_min, int q_max) {
  double q = std::nearbyint(x / s) + z;
  q = std::clamp(q, static_cast<double>(q_min), static_cast<double>(q_max));
  return (q - z) * s;
}

// Loss of quantizing every element of x at symmetric scale s.
inline double sq_loss_at(const std::vector<float>& x, double s, int q_min,
                         int q_max) {
  double loss = 0.0;
  for (float v : x) {
    const double e = v - quant_ref(v, s, 0, q_min, q_max);
    loss += e * e;
  }
  return loss;
}

// Independent re-evaluation of the threshold sweep: returns (scale, loss)
// per candidate i = 1..T.
inline std::vector<std::pair<double, double>> gridsearch_losses(
    const std::vector<float>& x, int bits, int t_bins) {
  double m = 0.0;
  for (float v : x) m = std::max(m, std::abs(static_cast<double>(v)));
  const int q_min = -(1 << (bits - 1));
  const int q_max = (1 << (bits - 1)) - 1;
  std::vector<std::pair<double, double>> out;
  for (int i = 1; i <= t_bins; ++i) {
    const double t = m * static_cast<double>(i) / static_cast<double>(t_bins);
    const double s = 2.0 * t / static_cast<double>((1LL << bits) - 1);
    out.emplace_back(s, sq_loss_at(x, s, q_min, q_max));
  }
  return out;
}

}  // namespace oracles

#endif  // PILLARHIST_TEST_ORACLES_HPP
