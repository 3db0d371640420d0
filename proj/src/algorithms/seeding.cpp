#include "seeding.hpp"

#include <stdexcept>
#include <string>

namespace popgrow::detail {

void check_domain_shape(const Shape& shape, const GridImage* domain) {
    if (domain && !(domain->shape() == shape)) {
        throw std::invalid_argument("domain shape " + domain->shape().to_string() + " differs from " +
                                    shape.to_string());
    }
}

void check_neighborhood(const Shape& shape, const Neighborhood& v) {
    if (v.rank() != shape.rank()) {
        throw std::invalid_argument("neighborhood of rank " + std::to_string(v.rank()) + " used on a " +
                                    std::to_string(shape.rank()) + "D grid");
    }
}

std::vector<std::vector<std::size_t>> seed_indices(const Shape& shape, const SeedList& seeds,
                                                   const GridImage* domain) {
    check_domain_shape(shape, domain);
    std::vector<bool> taken(shape.size(), false);
    std::vector<std::vector<std::size_t>> out;
    out.reserve(seeds.size());
    for (const auto& seed : seeds) {
        auto& pixels = out.emplace_back();
        pixels.reserve(seed.pixels.size());
        for (const auto& x : seed.pixels) {
            if (!shape.contains(x)) {
                throw std::invalid_argument("seed " + std::to_string(seed.label) + " pixel " + x.to_string() +
                                            " outside " + shape.to_string());
            }
            const auto i = shape.index(x);
            if (taken[i]) {
                throw std::invalid_argument("overlapping seeds at " + x.to_string());
            }
            if (domain && (*domain)[i] == 0) {
                throw std::invalid_argument("seed " + std::to_string(seed.label) + " pixel " + x.to_string() +
                                            " lies outside the domain");
            }
            taken[i] = true;
            pixels.push_back(i);
        }
    }
    return out;
}

}  // namespace popgrow::detail
