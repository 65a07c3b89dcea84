#ifndef PILLARHIST_MAT_HPP
#define PILLARHIST_MAT_HPP

#include <cstddef>
#include <span>
#include <vector>

namespace pillarhist {

// Dense row-major float matrix. Small feature blocks only; no BLAS needed.
struct Mat {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<float> data;

  Mat() = default;
  Mat(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0.0f) {}

  float& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  float at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }

  std::span<float> row(std::size_t r) {
    return std::span<float>(data.data() + r * cols, cols);
  }
  std::span<const float> row(std::size_t r) const {
    return std::span<const float>(data.data() + r * cols, cols);
  }
};

}  // namespace pillarhist

#endif  // PILLARHIST_MAT_HPP
