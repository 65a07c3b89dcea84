#include "pillarhist/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "pillarhist/quant.hpp"

namespace pillarhist {

ChannelRangeReport range_report(const std::string& encoder_label,
                                const std::vector<Mat>& inputs,
                                const std::vector<std::string>& channel_names,
                                int bits) {
  const std::size_t n_ch = channel_names.size();
  for (const Mat& m : inputs) {
    if (m.cols != n_ch) {
      throw std::invalid_argument(
          "range_report: matrix column count does not match channel names");
    }
  }

  ChannelRangeReport report;
  report.encoder_label = encoder_label;
  report.per_channel.resize(n_ch);

  std::vector<double> mins(n_ch, std::numeric_limits<double>::infinity());
  std::vector<double> maxs(n_ch, -std::numeric_limits<double>::infinity());
  std::vector<double> sums(n_ch, 0.0);
  std::vector<double> sq_sums(n_ch, 0.0);
  std::vector<std::uint64_t> counts(n_ch, 0);
  double abs_max = 0.0;

  for (const Mat& m : inputs) {
    for (std::size_t i = 0; i < m.rows; ++i) {
      auto row = m.row(i);
      for (std::size_t c = 0; c < n_ch; ++c) {
        const double v = row[c];
        mins[c] = std::min(mins[c], v);
        maxs[c] = std::max(maxs[c], v);
        sums[c] += v;
        sq_sums[c] += v * v;
        ++counts[c];
        abs_max = std::max(abs_max, std::abs(v));
      }
    }
  }

  // One max-min scale over the whole tensor, then per-channel damage.
  bool quantizable = abs_max > 0.0;
  QuantParams tensor_params;
  if (quantizable) {
    tensor_params =
        QuantParams::symmetric(scale_from_range(-abs_max, abs_max, bits), bits);
  }
  std::vector<double> err_sums(n_ch, 0.0);
  if (quantizable) {
    for (const Mat& m : inputs) {
      for (std::size_t i = 0; i < m.rows; ++i) {
        auto row = m.row(i);
        const std::vector<float> hat = fake_quantize(row, tensor_params);
        for (std::size_t c = 0; c < n_ch; ++c) {
          const double e = static_cast<double>(row[c]) - hat[c];
          err_sums[c] += e * e;
        }
      }
    }
  }

  double max_width = 0.0;
  double min_nonzero_width = std::numeric_limits<double>::infinity();
  double rel_sum = 0.0;
  std::size_t rel_count = 0;
  for (std::size_t c = 0; c < n_ch; ++c) {
    ChannelStats& ch = report.per_channel[c];
    ch.name = channel_names[c];
    if (counts[c] == 0) {
      ch.min = ch.max = ch.width = 0.0;
      continue;
    }
    ch.min = mins[c];
    ch.max = maxs[c];
    ch.width = maxs[c] - mins[c];
    const double n = static_cast<double>(counts[c]);
    const double mean = sums[c] / n;
    ch.variance = std::max(0.0, sq_sums[c] / n - mean * mean);
    ch.mse_8bit = err_sums[c] / n;

    max_width = std::max(max_width, ch.width);
    if (ch.width > 0.0) min_nonzero_width = std::min(min_nonzero_width, ch.width);
    report.clip_mse_at_8bit += ch.mse_8bit;
    if (ch.variance > 0.0) {
      rel_sum += ch.mse_8bit / ch.variance;
      ++rel_count;
    }
  }
  report.width_ratio =
      (max_width > 0.0 && std::isfinite(min_nonzero_width))
          ? max_width / min_nonzero_width
          : 1.0;
  report.rel_mse_at_8bit = rel_count > 0 ? rel_sum / static_cast<double>(rel_count) : 0.0;
  return report;
}

std::uint64_t flops_pfe(std::uint64_t n_max, std::uint64_t c_in,
                        std::uint64_t d) {
  return 2 * n_max * c_in * d;
}

std::uint64_t flops_pillarhist(std::uint64_t b_bins, std::uint64_t d) {
  return 2 * (2 * b_bins + 2) * d;
}

std::uint64_t pool_compares_pfe(std::uint64_t n_max, std::uint64_t d) {
  return n_max * d;
}

FlopsReport flops_report_pfe(std::uint64_t n_max, std::uint64_t c_in,
                             std::uint64_t d, std::uint64_t pillar_count) {
  FlopsReport r;
  r.encoder_label = "pfe";
  r.per_pillar_flops = flops_pfe(n_max, c_in, d);
  r.scene_flops = r.per_pillar_flops * pillar_count;
  r.aux_ops = pool_compares_pfe(n_max, d) * pillar_count;
  r.pillar_count = pillar_count;
  r.parameters = {{"n_max", n_max}, {"c_in", c_in}, {"d", d}};
  return r;
}

FlopsReport flops_report_pillarhist(std::uint64_t b_bins, std::uint64_t d,
                                    std::uint64_t pillar_count,
                                    std::uint64_t point_count) {
  FlopsReport r;
  r.encoder_label = "pillarhist";
  r.per_pillar_flops = flops_pillarhist(b_bins, d);
  r.scene_flops = r.per_pillar_flops * pillar_count;
  r.aux_ops = point_count;  // one histogram increment per point
  r.pillar_count = pillar_count;
  r.parameters = {{"b_bins", b_bins}, {"d", d}};
  return r;
}

nlohmann::json to_json(const ChannelRangeReport& report) {
  nlohmann::json channels = nlohmann::json::array();
  for (const ChannelStats& ch : report.per_channel) {
    channels.push_back({{"name", ch.name},
                        {"min", ch.min},
                        {"max", ch.max},
                        {"width", ch.width},
                        {"variance", ch.variance},
                        {"mse_8bit", ch.mse_8bit}});
  }
  return {{"encoder", report.encoder_label},
          {"channels", channels},
          {"width_ratio", report.width_ratio},
          {"clip_mse_at_8bit", report.clip_mse_at_8bit},
          {"rel_mse_at_8bit", report.rel_mse_at_8bit}};
}

nlohmann::json to_json(const FlopsReport& report) {
  return {{"encoder", report.encoder_label},
          {"per_pillar_flops", report.per_pillar_flops},
          {"scene_flops", report.scene_flops},
          {"aux_ops", report.aux_ops},
          {"pillar_count", report.pillar_count},
          {"parameters", report.parameters}};
}

}  // namespace pillarhist
