#include "pillarhist/point_io.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace pillarhist {

namespace {

constexpr std::size_t kRecordBytes = 16;

float f32_from_le(const unsigned char* b) {
  std::uint32_t u = static_cast<std::uint32_t>(b[0]) |
                    static_cast<std::uint32_t>(b[1]) << 8 |
                    static_cast<std::uint32_t>(b[2]) << 16 |
                    static_cast<std::uint32_t>(b[3]) << 24;
  return std::bit_cast<float>(u);
}

void f32_to_le(float v, unsigned char* b) {
  std::uint32_t u = std::bit_cast<std::uint32_t>(v);
  b[0] = static_cast<unsigned char>(u & 0xff);
  b[1] = static_cast<unsigned char>((u >> 8) & 0xff);
  b[2] = static_cast<unsigned char>((u >> 16) & 0xff);
  b[3] = static_cast<unsigned char>((u >> 24) & 0xff);
}

[[noreturn]] void fail(const std::string& msg) { throw std::runtime_error(msg); }

}  // namespace

PointCloud read_point_cloud_bin(const std::string& path) {
  std::ifstream fs(path, std::ios::binary | std::ios::ate);
  if (!fs.is_open()) fail("cannot open file: " + path);

  const std::streamoff size = fs.tellg();
  fs.seekg(0, std::ios::beg);
  if (size % static_cast<std::streamoff>(kRecordBytes) != 0) {
    fail("malformed file " + path + ": length " + std::to_string(size) +
         " is not a multiple of 16");
  }

  const std::size_t n = static_cast<std::size_t>(size) / kRecordBytes;
  std::vector<unsigned char> buf(static_cast<std::size_t>(size));
  if (size > 0) fs.read(reinterpret_cast<char*>(buf.data()), size);
  if (size > 0 && !fs) fail("short read on " + path);

  PointCloud cloud;
  cloud.source_id = path;
  cloud.points.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const unsigned char* rec = buf.data() + i * kRecordBytes;
    Point p{f32_from_le(rec), f32_from_le(rec + 4), f32_from_le(rec + 8),
            f32_from_le(rec + 12)};
    if (!std::isfinite(p.x) || !std::isfinite(p.y) || !std::isfinite(p.z) ||
        !std::isfinite(p.r)) {
      fail("malformed value in " + path + ": non-finite float in record " +
           std::to_string(i));
    }
    cloud.points.push_back(p);
  }
  return cloud;
}

void write_point_cloud_bin(const std::string& path, const PointCloud& cloud) {
  std::ofstream fs(path, std::ios::binary | std::ios::trunc);
  if (!fs.is_open()) fail("cannot open file for writing: " + path);

  std::vector<unsigned char> buf(cloud.points.size() * kRecordBytes);
  for (std::size_t i = 0; i < cloud.points.size(); ++i) {
    unsigned char* rec = buf.data() + i * kRecordBytes;
    f32_to_le(cloud.points[i].x, rec);
    f32_to_le(cloud.points[i].y, rec + 4);
    f32_to_le(cloud.points[i].z, rec + 8);
    f32_to_le(cloud.points[i].r, rec + 12);
  }
  fs.write(reinterpret_cast<const char*>(buf.data()),
           static_cast<std::streamsize>(buf.size()));
  if (!fs) fail("write failed: " + path);
}

PointCloud read_point_cloud_text(const std::string& path) {
  std::ifstream fs(path);
  if (!fs.is_open()) fail("cannot open file: " + path);

  PointCloud cloud;
  cloud.source_id = path;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(fs, line)) {
    ++line_no;
    std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;

    std::istringstream ls(line);
    double v[4];
    for (int k = 0; k < 4; ++k) {
      if (!(ls >> v[k])) {
        fail("line " + std::to_string(line_no) + " of " + path +
             ": expected 4 floats");
      }
      if (!std::isfinite(v[k])) {
        fail("line " + std::to_string(line_no) + " of " + path +
             ": non-finite value");
      }
    }
    std::string extra;
    if (ls >> extra) {
      fail("line " + std::to_string(line_no) + " of " + path +
           ": expected 4 fields, found more");
    }
    cloud.points.push_back(Point{static_cast<float>(v[0]),
                                 static_cast<float>(v[1]),
                                 static_cast<float>(v[2]),
                                 static_cast<float>(v[3])});
  }
  return cloud;
}

void write_point_cloud_text(const std::string& path, const PointCloud& cloud) {
  std::ofstream fs(path, std::ios::trunc);
  if (!fs.is_open()) fail("cannot open file for writing: " + path);
  char buf[160];
  for (const Point& p : cloud.points) {
    std::snprintf(buf, sizeof(buf), "%.9g %.9g %.9g %.9g\n", p.x, p.y, p.z,
                  p.r);
    fs << buf;
  }
  if (!fs) fail("write failed: " + path);
}

PointCloud read_point_cloud_auto(const std::string& path) {
  auto ends_with = [&](const char* suffix) {
    const std::string s(suffix);
    return path.size() >= s.size() &&
           path.compare(path.size() - s.size(), s.size(), s) == 0;
  };
  if (ends_with(".txt") || ends_with(".csv")) return read_point_cloud_text(path);
  return read_point_cloud_bin(path);
}

PointCloud filter_to_range(const PointCloud& cloud, const GridConfig& grid) {
  grid.validate();
  PointCloud out;
  out.source_id = cloud.source_id;
  out.points.reserve(cloud.points.size());
  for (const Point& p : cloud.points) {
    if (grid.contains(p)) out.points.push_back(p);
  }
  return out;
}

}  // namespace pillarhist
