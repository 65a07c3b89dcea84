#include <doctest.h>

#include <bit>
#include <cstdint>
#include <cstring>
#include <vector>

#include "oracles.hpp"
#include "pillarhist/point_io.hpp"
#include "pillarhist/rng.hpp"
#include "test_util.hpp"

using namespace pillarhist;

namespace {

void push_f32_le(std::vector<unsigned char>& buf, float v) {
  const std::uint32_t u = std::bit_cast<std::uint32_t>(v);
  buf.push_back(static_cast<unsigned char>(u & 0xff));
  buf.push_back(static_cast<unsigned char>((u >> 8) & 0xff));
  buf.push_back(static_cast<unsigned char>((u >> 16) & 0xff));
  buf.push_back(static_cast<unsigned char>((u >> 24) & 0xff));
}

PointCloud random_cloud(std::uint64_t seed, std::size_t n, double lo,
                        double hi) {
  PointCloud cloud;
  for (std::size_t i = 0; i < n; ++i) {
    cloud.points.push_back(
        Point{static_cast<float>(uniform_at(seed, i, 0, lo, hi)),
              static_cast<float>(uniform_at(seed, i, 1, lo, hi)),
              static_cast<float>(uniform_at(seed, i, 2, lo, hi)),
              static_cast<float>(uniform_at(seed, i, 3, 0.0, 255.0))});
  }
  return cloud;
}

}  // namespace

TEST_CASE("binary reader decodes packed records in order") {
  testutil::TempDir tmp("bin_read");
  std::vector<unsigned char> bytes;
  push_f32_le(bytes, 1.0f);
  push_f32_le(bytes, 2.0f);
  push_f32_le(bytes, 3.0f);
  push_f32_le(bytes, 0.5f);
  push_f32_le(bytes, -1.0f);
  push_f32_le(bytes, 0.0f);
  push_f32_le(bytes, 0.25f);
  push_f32_le(bytes, 1.0f);
  const std::string path = tmp.file("two.bin");
  testutil::write_bytes(path, bytes);

  PointCloud cloud = read_point_cloud_bin(path);
  REQUIRE(cloud.size() == 2);
  CHECK(cloud.points[0].x == 1.0f);
  CHECK(cloud.points[0].y == 2.0f);
  CHECK(cloud.points[0].z == 3.0f);
  CHECK(cloud.points[0].r == 0.5f);
  CHECK(cloud.points[1].x == -1.0f);
  CHECK(cloud.points[1].y == 0.0f);
  CHECK(cloud.points[1].z == 0.25f);
  CHECK(cloud.points[1].r == 1.0f);
}

TEST_CASE("binary reader accepts an empty file") {
  testutil::TempDir tmp("bin_empty");
  const std::string path = tmp.file("empty.bin");
  testutil::write_bytes(path, {});
  CHECK(read_point_cloud_bin(path).empty());
}

TEST_CASE("binary reader rejects bad input") {
  testutil::TempDir tmp("bin_bad");

  SUBCASE("length not a multiple of 16") {
    const std::string path = tmp.file("short.bin");
    testutil::write_bytes(path, std::vector<unsigned char>(17, 0));
    CHECK_THROWS_WITH_AS(read_point_cloud_bin(path),
                         doctest::Contains("not a multiple of 16"),
                         std::runtime_error);
  }

  SUBCASE("non-finite value names the record index") {
    std::vector<unsigned char> bytes;
    push_f32_le(bytes, 1.0f);
    push_f32_le(bytes, 1.0f);
    push_f32_le(bytes, 1.0f);
    push_f32_le(bytes, 1.0f);
    push_f32_le(bytes, std::numeric_limits<float>::quiet_NaN());
    push_f32_le(bytes, 0.0f);
    push_f32_le(bytes, 0.0f);
    push_f32_le(bytes, 0.0f);
    const std::string path = tmp.file("nan.bin");
    testutil::write_bytes(path, bytes);
    CHECK_THROWS_WITH_AS(read_point_cloud_bin(path),
                         doctest::Contains("record 1"), std::runtime_error);
  }
}

TEST_CASE("binary round-trip is bit-identical for 1000 random records") {
  testutil::TempDir tmp("bin_rt");
  PointCloud cloud = random_cloud(41, 1000, -80.0, 80.0);
  const std::string a = tmp.file("a.bin");
  const std::string b = tmp.file("b.bin");
  write_point_cloud_bin(a, cloud);
  write_point_cloud_bin(b, read_point_cloud_bin(a));
  CHECK(testutil::read_bytes(a) == testutil::read_bytes(b));
}

TEST_CASE("text reader parses lines and skips comments") {
  testutil::TempDir tmp("txt_read");

  SUBCASE("single zero line") {
    const std::string path = tmp.file("zero.txt");
    testutil::write_text(path, "0 0 0 0\n");
    PointCloud cloud = read_point_cloud_text(path);
    REQUIRE(cloud.size() == 1);
    CHECK(cloud.points[0].x == 0.0f);
    CHECK(cloud.points[0].r == 0.0f);
  }

  SUBCASE("comment-only file yields zero points") {
    const std::string path = tmp.file("comments.txt");
    testutil::write_text(path, "# a\n# b\n\n   # c\n");
    CHECK(read_point_cloud_text(path).empty());
  }

  SUBCASE("wrong field count names the line") {
    const std::string path = tmp.file("bad.txt");
    testutil::write_text(path, "1 2 3 4\n1 2 3\n");
    CHECK_THROWS_WITH_AS(read_point_cloud_text(path),
                         doctest::Contains("line 2"), std::runtime_error);
  }

  SUBCASE("unparsable float names the line") {
    const std::string path = tmp.file("badfloat.txt");
    testutil::write_text(path, "# header\n1 2 x 4\n");
    CHECK_THROWS_WITH_AS(read_point_cloud_text(path),
                         doctest::Contains("line 2"), std::runtime_error);
  }

  SUBCASE("non-finite value rejected") {
    const std::string path = tmp.file("inf.txt");
    testutil::write_text(path, "1 2 inf 4\n");
    CHECK_THROWS_AS(read_point_cloud_text(path), std::runtime_error);
  }
}

TEST_CASE("text dump of a binary cloud re-reads value-equal") {
  testutil::TempDir tmp("txt_rt");
  PointCloud cloud = random_cloud(97, 300, -51.2, 51.2);
  const std::string bin = tmp.file("c.bin");
  write_point_cloud_bin(bin, cloud);
  PointCloud from_bin = read_point_cloud_bin(bin);

  const std::string txt = tmp.file("c.txt");
  write_point_cloud_text(txt, from_bin);
  PointCloud from_txt = read_point_cloud_text(txt);

  REQUIRE(from_txt.size() == from_bin.size());
  for (std::size_t i = 0; i < from_bin.size(); ++i) {
    CHECK(from_txt.points[i].x == from_bin.points[i].x);
    CHECK(from_txt.points[i].y == from_bin.points[i].y);
    CHECK(from_txt.points[i].z == from_bin.points[i].z);
    CHECK(from_txt.points[i].r == from_bin.points[i].r);
  }
}

TEST_CASE("filter_to_range keeps the half-open box") {
  GridConfig grid{0.0, 10.0, 0.0, 10.0, -2.0, 2.0, 1.0, 1.0};

  SUBCASE("upper boundary drops, lower boundary keeps") {
    PointCloud cloud;
    cloud.points.push_back(Point{10.0f, 5.0f, 0.0f, 0.0f});  // x == x_max
    cloud.points.push_back(Point{0.0f, 0.0f, -2.0f, 0.0f});  // all at minima
    PointCloud out = filter_to_range(cloud, grid);
    REQUIRE(out.size() == 1);
    CHECK(out.points[0].x == 0.0f);
  }

  SUBCASE("matches brute-force oracle on 500 random points") {
    PointCloud cloud = random_cloud(7, 500, -3.0, 13.0);
    PointCloud got = filter_to_range(cloud, grid);
    PointCloud want = oracles::brute_filter(cloud, grid);
    REQUIRE(got.size() == want.size());
    for (std::size_t i = 0; i < got.size(); ++i) {
      CHECK(got.points[i].x == want.points[i].x);
      CHECK(got.points[i].y == want.points[i].y);
      CHECK(got.points[i].z == want.points[i].z);
    }
    CHECK(got.size() <= cloud.size());
  }

  SUBCASE("idempotent") {
    PointCloud cloud = random_cloud(11, 200, -3.0, 13.0);
    PointCloud once = filter_to_range(cloud, grid);
    PointCloud twice = filter_to_range(once, grid);
    REQUIRE(twice.size() == once.size());
    for (std::size_t i = 0; i < once.size(); ++i) {
      CHECK(twice.points[i].x == once.points[i].x);
    }
    for (const Point& p : once.points) CHECK(grid.contains(p));
  }
}
