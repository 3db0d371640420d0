#pragma once

#include <cstddef>
#include <vector>

#include "popgrow/grid.hpp"

namespace popgrow::detail {

/// Linear pixel indices of every seed, in list order. Throws
/// std::invalid_argument for out-of-bounds, overlapping, or (when `domain`
/// is given) out-of-domain pixels.
std::vector<std::vector<std::size_t>> seed_indices(const Shape& shape, const SeedList& seeds,
                                                   const GridImage* domain);

void check_domain_shape(const Shape& shape, const GridImage* domain);
void check_neighborhood(const Shape& shape, const Neighborhood& v);

}  // namespace popgrow::detail
