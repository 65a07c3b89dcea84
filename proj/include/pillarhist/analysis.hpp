#ifndef PILLARHIST_ANALYSIS_HPP
#define PILLARHIST_ANALYSIS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "pillarhist/mat.hpp"

namespace pillarhist {

struct ChannelStats {
  std::string name;
  double min = 0.0;
  double max = 0.0;
  double width = 0.0;
  double variance = 0.0;  // population variance of the channel's values
  double mse_8bit = 0.0;  // MSE under the tensor-wide max-min scale
};

// Per-channel value ranges of an encoder's pre-projection input, with the
// disparity statistic width_ratio = max width / min nonzero width and the
// quantization damage under a single tensor-wide 8-bit max-min scale.
struct ChannelRangeReport {
  std::string encoder_label;
  std::vector<ChannelStats> per_channel;
  double width_ratio = 1.0;
  double clip_mse_at_8bit = 0.0;  // sum of per-channel MSE
  double rel_mse_at_8bit = 0.0;   // mean over channels of MSE / variance
};

// Rows of every matrix are samples; columns are channels and must match
// channel_names. The quantization pass calibrates one max-min scale over
// the full value set, then scores each channel separately.
ChannelRangeReport range_report(const std::string& encoder_label,
                                const std::vector<Mat>& inputs,
                                const std::vector<std::string>& channel_names,
                                int bits = 8);

// Analytic per-pillar cost model, 1 multiply-accumulate = 2 FLOPs. The
// headline number counts the projection matmul only; comparisons and
// histogram increments are carried separately in FlopsReport.
std::uint64_t flops_pfe(std::uint64_t n_max, std::uint64_t c_in,
                        std::uint64_t d);
std::uint64_t flops_pillarhist(std::uint64_t b_bins, std::uint64_t d);

// Max-pool comparisons per pillar for the baseline encoder.
std::uint64_t pool_compares_pfe(std::uint64_t n_max, std::uint64_t d);

struct FlopsReport {
  std::string encoder_label;
  std::uint64_t per_pillar_flops = 0;  // projection matmul
  std::uint64_t scene_flops = 0;       // per_pillar_flops * pillar count
  std::uint64_t aux_ops = 0;  // pool comparisons / histogram increments
  std::uint64_t pillar_count = 0;
  nlohmann::json parameters;
};

FlopsReport flops_report_pfe(std::uint64_t n_max, std::uint64_t c_in,
                             std::uint64_t d, std::uint64_t pillar_count);
FlopsReport flops_report_pillarhist(std::uint64_t b_bins, std::uint64_t d,
                                    std::uint64_t pillar_count,
                                    std::uint64_t point_count);

nlohmann::json to_json(const ChannelRangeReport& report);
nlohmann::json to_json(const FlopsReport& report);

}  // namespace pillarhist

#endif  // PILLARHIST_ANALYSIS_HPP
