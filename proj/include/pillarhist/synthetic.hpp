#ifndef PILLARHIST_SYNTHETIC_HPP
#define PILLARHIST_SYNTHETIC_HPP

#include <cstdint>

#include "pillarhist/types.hpp"

namespace pillarhist {

// Seed-deterministic test scene: n points uniform over the grid box,
// intensity uniform over [0, r_max). Point i draws its four values from
// counter_rand(seed, i, 0..3), so the scene depends only on (seed, n, grid,
// r_max).
PointCloud synthetic_scene(std::uint64_t seed, std::size_t n_points,
                           const GridConfig& grid, double r_max = 255.0);

}  // namespace pillarhist

#endif  // PILLARHIST_SYNTHETIC_HPP
