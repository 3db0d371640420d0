#pragma once

// Brute-force references for the SRGPA algorithms, written without the engine.

#include <cstddef>
#include <cstdint>
#include <set>
#include <vector>

#include "popgrow/algorithms.hpp"
#include "popgrow/grid.hpp"

namespace popgrow::oracles {

/// Multi-source breadth-first geodesic distance inside I != 0 (or the whole grid).
[[nodiscard]] DistanceMap bfs_distance(const Shape& shape, const SeedList& seeds, const Neighborhood& v,
                                       const GridImage* domain = nullptr);

/// Union-find over V-adjacent nonzero pixels. Components are numbered in
/// scan order of their first pixel; zero pixels are unassigned.
[[nodiscard]] LabelMap unionfind_clusters(const GridImage& image, const Neighborhood& v);

/// Level components by flood fill; a component is a minimum iff every
/// outer neighbor is strictly higher.
[[nodiscard]] MinimaResult naive_minima(const GridImage& f, const Neighborhood& v);

struct IterativeResult {
    GridImage image;
    std::size_t applications = 0;  // operator evaluations, the last one confirming E^{t+1} = E^t
    std::size_t fixed_index = 0;   // smallest t with E^t a fixed point
};

/// E^{t+1} = max(erosion(E^t, V + center), g) from E^0 = f, until nilpotence.
[[nodiscard]] IterativeResult iterative_erosion_reconstruction(const GridImage& f, const GridImage& g,
                                                               const Neighborhood& v);

/// Pixel sets of the flagged minima, for order-free comparison.
[[nodiscard]] std::set<std::vector<std::size_t>> minima_sets(const MinimaResult& result);

/// True when both label maps induce the same partition (same unassigned and
/// boundary pixels, labels equal up to a bijection).
[[nodiscard]] bool same_partition(const LabelMap& a, const LabelMap& b);

}  // namespace popgrow::oracles
