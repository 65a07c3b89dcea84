#ifndef PILLARHIST_QUANT_HPP
#define PILLARHIST_QUANT_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "pillarhist/linear_layer.hpp"
#include "pillarhist/mat.hpp"

namespace pillarhist {

// Uniform signed quantizer parameters for one tensor. Symmetric mode fixes
// z = 0; the integer range is [-2^(b-1), 2^(b-1) - 1].
struct QuantParams {
  double s = 1.0;   // scale
  int z = 0;        // zero-point
  int bits = 8;     // bit-width b
  int q_min = -128;
  int q_max = 127;

  static QuantParams symmetric(double s, int bits);
  void validate() const;

  bool operator==(const QuantParams&) const = default;
};

struct QuantizedTensor {
  std::vector<std::int32_t> values;
  QuantParams params;
  std::vector<std::size_t> shape;
};

// Candidate sweep for the scale search: T symmetric clipping thresholds
// max|x| * i / T, i = 1..T. alpha/beta bound the swept fraction of the
// initial scale; the linear i/T schedule realizes [1/T, 1].
struct GridSearchConfig {
  int t_bins = 100;
  double alpha = 0.01;
  double beta = 1.0;

  void validate() const;
};

// Quantization error split by cause: elements whose pre-clamp integer stays
// inside [q_min, q_max] contribute rounding error, the rest clipping error.
struct ErrorDecomposition {
  double rounding_mse = 0.0;
  double clipping_mse = 0.0;
  double total_mse = 0.0;
};

// x_int = clamp(round_half_even(x / s) + z, q_min, q_max), per element.
QuantizedTensor quantize(std::span<const float> x, const QuantParams& p);

// x_hat = (x_int - z) * s, per element.
std::vector<double> dequantize(const QuantizedTensor& q);

// Quantize-dequantize, keeping float storage for pipeline use.
std::vector<float> fake_quantize(std::span<const float> x,
                                 const QuantParams& p);

// s = (x_max - x_min) / (2^b - 1). Requires x_max > x_min.
double scale_from_range(double x_min, double x_max, int bits);

// Symmetric scale covering [-max|x|, +max|x|]: zero clipping error on the
// calibration tensor. Throws on an all-zero (degenerate-range) tensor.
QuantParams calibrate_maxmin(std::span<const float> x, int bits);

// Sweeps the candidate thresholds and returns the scale minimizing the
// summed squared quantization error, ties broken toward the larger
// threshold. The result is exactly the argmin over the candidate set.
QuantParams calibrate_gridsearch(std::span<const float> x, int bits,
                                 const GridSearchConfig& cfg);

ErrorDecomposition error_decompose(std::span<const float> x,
                                   const QuantParams& p);

// Simulated quantized layer: weights and inputs are quantize-dequantized to
// their grids, then the float matmul runs; bias stays full precision.
Mat quantized_linear_forward(const LinearLayer& layer,
                             const QuantParams& w_params,
                             const QuantParams& a_params, const Mat& rows);

enum class Calibrator { kMaxMin, kGridSearch };

// Per-layer calibration result. Exempt layers carry their computed params
// but execute in full precision.
struct LayerCalibration {
  QuantParams weights;
  QuantParams activations;
  bool fp_exempt = false;
};

// Layer-sequential post-training quantization: weight params per layer from
// the calibrator alone, then activation params layer by layer, where each
// layer's observed inputs are the (quantized, unless exempt) outputs of the
// previous layer. first_last_fp marks layer 0 and layer N-1 exempt.
std::vector<LayerCalibration> naive_ptq(
    const std::vector<LinearLayer>& layers,
    const std::vector<Mat>& calibration_batches, int bits,
    const GridSearchConfig& cfg, bool first_last_fp = true,
    Calibrator calibrator = Calibrator::kGridSearch);

std::string to_string(Calibrator c);
Calibrator calibrator_from_string(const std::string& name);

}  // namespace pillarhist

#endif  // PILLARHIST_QUANT_HPP
