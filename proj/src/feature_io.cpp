#include "pillarhist/feature_io.hpp"

#include <bit>
#include <cstdint>
#include <fstream>
#include <stdexcept>

namespace pillarhist {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw std::runtime_error(msg); }

}  // namespace

std::string metadata_path(const std::string& feature_path) {
  return feature_path + ".meta.json";
}

void write_feature_batch(const std::string& path, const Mat& rows,
                         const nlohmann::json& metadata) {
  std::ofstream fs(path, std::ios::binary | std::ios::trunc);
  if (!fs.is_open()) fail("cannot open file for writing: " + path);

  std::vector<unsigned char> buf(rows.data.size() * 4);
  for (std::size_t i = 0; i < rows.data.size(); ++i) {
    const std::uint32_t u = std::bit_cast<std::uint32_t>(rows.data[i]);
    buf[i * 4 + 0] = static_cast<unsigned char>(u & 0xff);
    buf[i * 4 + 1] = static_cast<unsigned char>((u >> 8) & 0xff);
    buf[i * 4 + 2] = static_cast<unsigned char>((u >> 16) & 0xff);
    buf[i * 4 + 3] = static_cast<unsigned char>((u >> 24) & 0xff);
  }
  fs.write(reinterpret_cast<const char*>(buf.data()),
           static_cast<std::streamsize>(buf.size()));
  if (!fs) fail("write failed: " + path);

  nlohmann::json meta = metadata;
  meta["rows"] = rows.rows;
  meta["row_len"] = rows.cols;
  std::ofstream ms(metadata_path(path), std::ios::trunc);
  if (!ms.is_open()) fail("cannot open file for writing: " + metadata_path(path));
  ms << meta.dump(2) << "\n";
  if (!ms) fail("write failed: " + metadata_path(path));
}

Mat read_feature_batch(const std::string& path) {
  const nlohmann::json meta = read_feature_metadata(path);
  const std::size_t rows = meta.at("rows").get<std::size_t>();
  const std::size_t cols = meta.at("row_len").get<std::size_t>();

  std::ifstream fs(path, std::ios::binary | std::ios::ate);
  if (!fs.is_open()) fail("cannot open file: " + path);
  const std::streamoff size = fs.tellg();
  fs.seekg(0, std::ios::beg);
  if (static_cast<std::size_t>(size) != rows * cols * 4) {
    fail("feature file " + path + " does not match its metadata");
  }

  std::vector<unsigned char> buf(static_cast<std::size_t>(size));
  if (size > 0) fs.read(reinterpret_cast<char*>(buf.data()), size);
  if (size > 0 && !fs) fail("short read on " + path);

  Mat m(rows, cols);
  for (std::size_t i = 0; i < m.data.size(); ++i) {
    const std::uint32_t u = static_cast<std::uint32_t>(buf[i * 4]) |
                            static_cast<std::uint32_t>(buf[i * 4 + 1]) << 8 |
                            static_cast<std::uint32_t>(buf[i * 4 + 2]) << 16 |
                            static_cast<std::uint32_t>(buf[i * 4 + 3]) << 24;
    m.data[i] = std::bit_cast<float>(u);
  }
  return m;
}

nlohmann::json read_feature_metadata(const std::string& path) {
  std::ifstream ms(metadata_path(path));
  if (!ms.is_open()) fail("cannot open metadata: " + metadata_path(path));
  nlohmann::json meta;
  ms >> meta;
  return meta;
}

}  // namespace pillarhist
