#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "popgrow/engine.hpp"
#include "popgrow/grid.hpp"

namespace popgrow::testing {

inline GridImage random_image(std::mt19937_64& rng, const Shape& shape, Value max_value) {
    std::uniform_int_distribution<int> pick(0, max_value);
    std::vector<Value> values(shape.size());
    for (auto& v : values) v = static_cast<Value>(pick(rng));
    return GridImage(shape, std::move(values));
}

/// Binary image with P(foreground) = density.
inline GridImage random_binary(std::mt19937_64& rng, const Shape& shape, double density) {
    std::bernoulli_distribution fg(density);
    std::vector<Value> values(shape.size());
    for (auto& v : values) v = fg(rng) ? 1 : 0;
    return GridImage(shape, std::move(values));
}

/// `count` distinct single-pixel seeds inside I != 0 (or anywhere).
inline SeedList random_point_seeds(std::mt19937_64& rng, const Shape& shape, std::size_t count,
                                   const GridImage* domain = nullptr) {
    std::vector<std::size_t> candidates;
    for (std::size_t i = 0; i < shape.size(); ++i)
        if (!domain || (*domain)[i] != 0) candidates.push_back(i);
    std::shuffle(candidates.begin(), candidates.end(), rng);
    SeedList seeds;
    for (std::size_t k = 0; k < count && k < candidates.size(); ++k)
        seeds.push_back(Seed{static_cast<std::uint32_t>(k), {shape.coordinate(candidates[k])}});
    return seeds;
}

/// Seeds made of small random blobs (a pixel plus some of its 4-neighbors),
/// kept disjoint.
inline SeedList random_blob_seeds(std::mt19937_64& rng, const Shape& shape, std::size_t count) {
    std::vector<bool> taken(shape.size(), false);
    std::uniform_int_distribution<std::size_t> any(0, shape.size() - 1);
    std::bernoulli_distribution coin(0.5);
    SeedList seeds;
    for (std::size_t k = 0; k < count; ++k) {
        Seed s{static_cast<std::uint32_t>(k), {}};
        std::size_t center;
        do center = any(rng);
        while (taken[center]);
        const auto c = shape.coordinate(center);
        std::vector<Coordinate> candidates{c};
        for (std::size_t a = 0; a < shape.rank(); ++a) {
            for (int d : {-1, 1}) {
                auto y = c;
                y[a] += d;
                if (shape.contains(y) && coin(rng)) candidates.push_back(y);
            }
        }
        for (const auto& y : candidates) {
            const auto i = shape.index(y);
            if (taken[i]) continue;
            taken[i] = true;
            s.pixels.push_back(y);
        }
        seeds.push_back(std::move(s));
    }
    return seeds;
}

/// Z_i recomputed from ownership alone: unowned-or-foreign neighbors of X_i,
/// depending on the restriction.
inline std::vector<bool> zone_from_scratch(const Population& p, RegionId region) {
    const auto& shape = p.shape();
    std::vector<bool> zone(shape.size(), false);
    const auto& tribe = p.tribe(region);
    if (!tribe.is_active()) return zone;
    for (std::size_t i = 0; i < shape.size(); ++i) {
        if (p.owner(i) != region) continue;
        for (const auto& y : neighbors(shape.coordinate(i), tribe.neighborhood(), shape)) {
            const auto j = shape.index(y);
            const auto o = p.owner(j);
            if (tribe.restriction() == Restriction::AllRegions ? !o.has_value() : o != region) zone[j] = true;
        }
    }
    return zone;
}

}  // namespace popgrow::testing
