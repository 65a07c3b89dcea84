#include "pillarhist/quant.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace pillarhist {

namespace {

// Round-half-to-even of x/s plus the zero-point, before clamping. Kept in
// double until a range well inside int64 so extreme x/s cannot overflow the
// cast; anything that far out is clipped regardless.
std::int64_t pre_clamp_int(float x, const QuantParams& p) {
  double q = std::nearbyint(static_cast<double>(x) / p.s) +
             static_cast<double>(p.z);
  q = std::clamp(q, -9.0e15, 9.0e15);
  return static_cast<std::int64_t>(q);
}

double max_abs(std::span<const float> x) {
  double m = 0.0;
  for (float v : x) m = std::max(m, std::abs(static_cast<double>(v)));
  return m;
}

// Summed squared error of quantizing x with scale s (symmetric, z = 0).
double sq_error_at_scale(std::span<const float> x, double s, int q_min,
                         int q_max) {
  double sum = 0.0;
  for (float v : x) {
    double q = std::nearbyint(static_cast<double>(v) / s);
    q = std::clamp(q, static_cast<double>(q_min), static_cast<double>(q_max));
    const double err = static_cast<double>(v) - q * s;
    sum += err * err;
  }
  return sum;
}

}  // namespace

QuantParams QuantParams::symmetric(double s, int bits) {
  QuantParams p;
  p.s = s;
  p.z = 0;
  p.bits = bits;
  p.q_min = -(1 << (bits - 1));
  p.q_max = (1 << (bits - 1)) - 1;
  p.validate();
  return p;
}

void QuantParams::validate() const {
  if (!(s > 0.0) || !std::isfinite(s)) {
    throw std::invalid_argument("quant: scale must be positive and finite");
  }
  if (bits < 2 || bits > 30) {
    throw std::invalid_argument("quant: bit-width out of range [2, 30]");
  }
  if (q_min != -(1 << (bits - 1)) || q_max != (1 << (bits - 1)) - 1) {
    throw std::invalid_argument("quant: q_min/q_max inconsistent with bits");
  }
}

void GridSearchConfig::validate() const {
  if (t_bins < 1) throw std::invalid_argument("gridsearch: t_bins must be >= 1");
  if (!(alpha > 0.0) || !(alpha <= beta)) {
    throw std::invalid_argument("gridsearch: need 0 < alpha <= beta");
  }
}

QuantizedTensor quantize(std::span<const float> x, const QuantParams& p) {
  p.validate();
  QuantizedTensor out;
  out.params = p;
  out.shape = {x.size()};
  out.values.reserve(x.size());
  for (float v : x) {
    const std::int64_t q = pre_clamp_int(v, p);
    out.values.push_back(static_cast<std::int32_t>(
        std::clamp<std::int64_t>(q, p.q_min, p.q_max)));
  }
  return out;
}

std::vector<double> dequantize(const QuantizedTensor& q) {
  std::vector<double> out;
  out.reserve(q.values.size());
  for (std::int32_t v : q.values) {
    out.push_back(static_cast<double>(v - q.params.z) * q.params.s);
  }
  return out;
}

std::vector<float> fake_quantize(std::span<const float> x,
                                 const QuantParams& p) {
  p.validate();
  std::vector<float> out;
  out.reserve(x.size());
  for (float v : x) {
    const std::int64_t q = std::clamp<std::int64_t>(pre_clamp_int(v, p),
                                                    p.q_min, p.q_max);
    out.push_back(static_cast<float>(static_cast<double>(q - p.z) * p.s));
  }
  return out;
}

double scale_from_range(double x_min, double x_max, int bits) {
  if (!(x_max > x_min)) {
    throw std::invalid_argument("scale_from_range: need x_max > x_min");
  }
  return (x_max - x_min) / static_cast<double>((1LL << bits) - 1);
}

QuantParams calibrate_maxmin(std::span<const float> x, int bits) {
  if (x.empty()) throw std::invalid_argument("calibrate: empty tensor");
  const double m = max_abs(x);
  if (m == 0.0) {
    throw std::invalid_argument("calibrate: degenerate range (all zeros)");
  }
  return QuantParams::symmetric(scale_from_range(-m, m, bits), bits);
}

QuantParams calibrate_gridsearch(std::span<const float> x, int bits,
                                 const GridSearchConfig& cfg) {
  cfg.validate();
  if (x.empty()) throw std::invalid_argument("calibrate: empty tensor");
  const double m = max_abs(x);
  if (m == 0.0) {
    throw std::invalid_argument("calibrate: degenerate range (all zeros)");
  }

  const int q_min = -(1 << (bits - 1));
  const int q_max = (1 << (bits - 1)) - 1;
  const int t_bins = cfg.t_bins;

  double best_s = 0.0;
  double best_loss = 0.0;
  for (int i = 1; i <= t_bins; ++i) {
    const double threshold =
        m * static_cast<double>(i) / static_cast<double>(t_bins);
    const double s = scale_from_range(-threshold, threshold, bits);
    const double loss = sq_error_at_scale(x, s, q_min, q_max);
    // <= so that equal losses resolve to the larger threshold.
    if (i == 1 || loss <= best_loss) {
      best_loss = loss;
      best_s = s;
    }
  }
  return QuantParams::symmetric(best_s, bits);
}

ErrorDecomposition error_decompose(std::span<const float> x,
                                   const QuantParams& p) {
  p.validate();
  ErrorDecomposition d;
  if (x.empty()) return d;

  double rounding_sum = 0.0;
  double clipping_sum = 0.0;
  double total_sum = 0.0;
  for (float v : x) {
    const std::int64_t q = pre_clamp_int(v, p);
    const std::int64_t qc = std::clamp<std::int64_t>(q, p.q_min, p.q_max);
    const double x_hat = static_cast<double>(qc - p.z) * p.s;
    const double err = static_cast<double>(v) - x_hat;
    const double err2 = err * err;
    total_sum += err2;
    if (q >= p.q_min && q <= p.q_max) {
      rounding_sum += err2;
    } else {
      clipping_sum += err2;
    }
  }
  const double n = static_cast<double>(x.size());
  d.rounding_mse = rounding_sum / n;
  d.clipping_mse = clipping_sum / n;
  d.total_mse = total_sum / n;
  return d;
}

Mat quantized_linear_forward(const LinearLayer& layer,
                             const QuantParams& w_params,
                             const QuantParams& a_params, const Mat& rows) {
  if (rows.cols != layer.in_dim) {
    throw std::invalid_argument(
        "quantized_linear_forward: input column count mismatch");
  }
  LinearLayer sim = layer;
  sim.weights = fake_quantize(layer.weights, w_params);

  Mat x = rows;
  x.data = fake_quantize(rows.data, a_params);
  return linear_forward(sim, x);
}

std::vector<LayerCalibration> naive_ptq(
    const std::vector<LinearLayer>& layers,
    const std::vector<Mat>& calibration_batches, int bits,
    const GridSearchConfig& cfg, bool first_last_fp, Calibrator calibrator) {
  if (layers.empty()) throw std::invalid_argument("naive_ptq: no layers");
  if (calibration_batches.empty()) {
    throw std::invalid_argument("naive_ptq: empty calibration set");
  }
  for (const Mat& batch : calibration_batches) {
    if (batch.rows == 0 || batch.cols != layers.front().in_dim) {
      throw std::invalid_argument(
          "naive_ptq: calibration batch incompatible with first layer");
    }
  }

  auto calibrate = [&](std::span<const float> x) {
    return calibrator == Calibrator::kGridSearch
               ? calibrate_gridsearch(x, bits, cfg)
               : calibrate_maxmin(x, bits);
  };

  const std::size_t n = layers.size();
  std::vector<LayerCalibration> result(n);

  // Weight params come first and need no data.
  for (std::size_t i = 0; i < n; ++i) {
    result[i].weights = calibrate(layers[i].weights);
    result[i].fp_exempt = first_last_fp && (i == 0 || i == n - 1);
  }

  // Activation params layer by layer, propagating quantized outputs.
  std::vector<Mat> current = calibration_batches;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<float> observed;
    for (const Mat& batch : current) {
      observed.insert(observed.end(), batch.data.begin(), batch.data.end());
    }
    result[i].activations = calibrate(observed);

    std::vector<Mat> next;
    next.reserve(current.size());
    for (const Mat& batch : current) {
      next.push_back(result[i].fp_exempt
                         ? linear_forward(layers[i], batch)
                         : quantized_linear_forward(layers[i],
                                                    result[i].weights,
                                                    result[i].activations,
                                                    batch));
    }
    current = std::move(next);
  }
  return result;
}

std::string to_string(Calibrator c) {
  return c == Calibrator::kGridSearch ? "gridsearch" : "maxmin";
}

Calibrator calibrator_from_string(const std::string& name) {
  if (name == "gridsearch") return Calibrator::kGridSearch;
  if (name == "maxmin") return Calibrator::kMaxMin;
  throw std::invalid_argument("unknown calibrator: " + name);
}

}  // namespace pillarhist
