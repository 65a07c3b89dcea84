#ifndef PILLARHIST_POINT_IO_HPP
#define PILLARHIST_POINT_IO_HPP

#include <string>

#include "pillarhist/types.hpp"

namespace pillarhist {

// Binary point format: tightly packed 16-byte records, four little-endian
// IEEE-754 float32 fields in order x, y, z, r (velodyne .bin convention).
//
// Throws std::runtime_error when the file length is not a multiple of 16 or
// a record holds a non-finite value (the message names the record index).
PointCloud read_point_cloud_bin(const std::string& path);

void write_point_cloud_bin(const std::string& path, const PointCloud& cloud);

// Text point format: one point per line, four whitespace-separated decimal
// floats; lines starting with '#' and blank lines are skipped. Errors name
// the offending 1-based line number.
PointCloud read_point_cloud_text(const std::string& path);

// Writes with 9 significant digits, enough to round-trip any float32 value.
void write_point_cloud_text(const std::string& path, const PointCloud& cloud);

// Reads .txt/.csv as text, anything else as binary.
PointCloud read_point_cloud_auto(const std::string& path);

// Keeps exactly the points inside the grid's half-open range, in order.
PointCloud filter_to_range(const PointCloud& cloud, const GridConfig& grid);

}  // namespace pillarhist

#endif  // PILLARHIST_POINT_IO_HPP
