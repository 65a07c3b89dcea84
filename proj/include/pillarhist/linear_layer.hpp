#ifndef PILLARHIST_LINEAR_LAYER_HPP
#define PILLARHIST_LINEAR_LAYER_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "pillarhist/mat.hpp"

namespace pillarhist {

// Deterministic dense layer: y = W x + b, no activation. Weights are fully
// determined by (in_dim, out_dim, seed); see seeded().
struct LinearLayer {
  std::size_t in_dim = 0;
  std::size_t out_dim = 0;
  std::uint64_t seed = 0;
  std::vector<float> weights;  // out_dim x in_dim, row-major
  std::vector<float> bias;     // out_dim

  // weights[r][c] = uniform over [-1/sqrt(in_dim), +1/sqrt(in_dim)) drawn
  // from counter_rand(seed, r, c); bias all zero. Same (dims, seed) always
  // reproduces the same layer bit for bit.
  static LinearLayer seeded(std::size_t in_dim, std::size_t out_dim,
                            std::uint64_t seed);

  static LinearLayer identity(std::size_t dim);
};

// Applies the layer to each row. Throws std::invalid_argument on a column
// count mismatch. Accumulation in double, per output element.
Mat linear_forward(const LinearLayer& layer, const Mat& rows);

std::vector<float> linear_forward(const LinearLayer& layer,
                                  std::span<const float> row);

}  // namespace pillarhist

#endif  // PILLARHIST_LINEAR_LAYER_HPP
