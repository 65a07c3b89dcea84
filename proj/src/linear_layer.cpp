#include "pillarhist/linear_layer.hpp"

#include <cmath>
#include <stdexcept>

#include "pillarhist/rng.hpp"

namespace pillarhist {

LinearLayer LinearLayer::seeded(std::size_t in_dim, std::size_t out_dim,
                                std::uint64_t seed) {
  if (in_dim == 0 || out_dim == 0) {
    throw std::invalid_argument("LinearLayer: dimensions must be positive");
  }
  LinearLayer layer;
  layer.in_dim = in_dim;
  layer.out_dim = out_dim;
  layer.seed = seed;
  layer.weights.resize(in_dim * out_dim);
  layer.bias.assign(out_dim, 0.0f);

  const double bound = 1.0 / std::sqrt(static_cast<double>(in_dim));
  for (std::size_t r = 0; r < out_dim; ++r) {
    for (std::size_t c = 0; c < in_dim; ++c) {
      layer.weights[r * in_dim + c] =
          static_cast<float>(uniform_at(seed, r, c, -bound, bound));
    }
  }
  return layer;
}

LinearLayer LinearLayer::identity(std::size_t dim) {
  LinearLayer layer;
  layer.in_dim = dim;
  layer.out_dim = dim;
  layer.weights.assign(dim * dim, 0.0f);
  layer.bias.assign(dim, 0.0f);
  for (std::size_t i = 0; i < dim; ++i) layer.weights[i * dim + i] = 1.0f;
  return layer;
}

Mat linear_forward(const LinearLayer& layer, const Mat& rows) {
  if (rows.cols != layer.in_dim) {
    throw std::invalid_argument("linear_forward: input has " +
                                std::to_string(rows.cols) +
                                " columns, layer expects " +
                                std::to_string(layer.in_dim));
  }
  Mat out(rows.rows, layer.out_dim);
  for (std::size_t i = 0; i < rows.rows; ++i) {
    const float* x = rows.data.data() + i * rows.cols;
    for (std::size_t r = 0; r < layer.out_dim; ++r) {
      const float* w = layer.weights.data() + r * layer.in_dim;
      double acc = layer.bias[r];
      for (std::size_t c = 0; c < layer.in_dim; ++c) {
        acc += static_cast<double>(w[c]) * static_cast<double>(x[c]);
      }
      out.at(i, r) = static_cast<float>(acc);
    }
  }
  return out;
}

std::vector<float> linear_forward(const LinearLayer& layer,
                                  std::span<const float> row) {
  Mat m(1, row.size());
  std::copy(row.begin(), row.end(), m.data.begin());
  Mat out = linear_forward(layer, m);
  return out.data;
}

}  // namespace pillarhist
