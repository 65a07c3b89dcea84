#ifndef PILLARHIST_FEATURE_IO_HPP
#define PILLARHIST_FEATURE_IO_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "pillarhist/mat.hpp"

namespace pillarhist {

// Feature batch format: a packed array of little-endian float32, row-major,
// one row per pillar in canonical pillar order, plus a JSON metadata sidecar
// at <path>.meta.json.
void write_feature_batch(const std::string& path, const Mat& rows,
                         const nlohmann::json& metadata);

Mat read_feature_batch(const std::string& path);

nlohmann::json read_feature_metadata(const std::string& path);

std::string metadata_path(const std::string& feature_path);

}  // namespace pillarhist

#endif  // PILLARHIST_FEATURE_IO_HPP
