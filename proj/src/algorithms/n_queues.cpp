#include <algorithm>
#include <stdexcept>

#include "popgrow/algorithms.hpp"
#include "seeding.hpp"

namespace popgrow {

// --- Distance function -------------------------------------------------------

DistanceMap distance(const Shape& shape, const SeedList& seeds, const Neighborhood& v, const GridImage* domain) {
    detail::check_neighborhood(shape, v);
    const auto seed_pixels = detail::seed_indices(shape, seeds, domain);

    // Couples pushed while one queue drains land in the other one.
    QueueIndex incoming = 0;
    OrderingFunction delta;
    if (domain) {
        delta = [domain, &incoming](std::size_t y, RegionId) { return (*domain)[y] != 0 ? incoming : kOut; };
    } else {
        delta = [&incoming](std::size_t, RegionId) { return incoming; };
    }
    Population pop(shape, 2, std::move(delta));

    DistanceMap out{shape, std::vector<std::uint32_t>(shape.size(), DistanceMap::kUnreached)};
    const auto tribe = Tribe::active(v, Restriction::AllRegions);
    for (const auto& pixels : seed_pixels) {
        const auto r = pop.create_region(tribe);
        for (auto px : pixels) {
            pop.grow(px, r);
            out.values[px] = 0;
        }
    }

    std::uint32_t dist = 0;
    while (!pop.queues().all_empty()) {
        const auto draining = incoming;
        incoming = 1 - incoming;
        pop.queues().select_queue(draining);
        ++dist;
        while (auto c = pop.pop_valid()) {
            pop.grow(c->pixel, c->region);
            out.values[c->pixel] = dist;
        }
    }
    return out;
}

// --- Watershed ---------------------------------------------------------------

LabelMap watershed(const GridImage& f, const SeedList& seeds, const Neighborhood& v, const GridImage* domain) {
    const auto& shape = f.shape();
    detail::check_neighborhood(shape, v);
    const auto seed_pixels = detail::seed_indices(shape, seeds, domain);

    const Value lo = f.min_value();
    const Value hi = f.max_value();
    Value level = lo;
    OrderingFunction delta;
    if (domain) {
        delta = [&f, &level, lo, domain](std::size_t y, RegionId) {
            return (*domain)[y] != 0 ? QueueIndex{std::max(level, f[y])} - lo : kOut;
        };
    } else {
        delta = [&f, &level, lo](std::size_t y, RegionId) { return QueueIndex{std::max(level, f[y])} - lo; };
    }
    Population pop(shape, std::size_t{hi} - lo + 1, std::move(delta));

    const auto boundary = pop.create_region(Tribe::passive());
    const auto tribe = Tribe::active(v, Restriction::AllRegions);
    std::vector<std::int32_t> label_of{LabelMap::kBoundary};
    for (std::size_t s = 0; s < seeds.size(); ++s) {
        const auto r = pop.create_region(tribe);
        label_of.push_back(static_cast<std::int32_t>(seeds[s].label));
        for (auto px : seed_pixels[s]) pop.grow(px, r);
    }

    for (std::uint32_t l = lo; l <= hi; ++l) {
        level = static_cast<Value>(l);
        pop.queues().select_queue(l - lo);
        pop.drain_waves(GrowthPolicy::WatershedBoundary, boundary);
    }

    LabelMap out(shape);
    for (std::size_t i = 0; i < shape.size(); ++i)
        if (auto o = pop.owner(i)) out.labels[i] = label_of[*o];
    return out;
}

// --- Geodesic reconstruction -------------------------------------------------

namespace {

struct Chimney {
    std::size_t pixel;
    Value level;
};

// Flooding of g from chimneys: each chimney opens a region at its level if
// its pixel is still free, and every growth records the current level.
GridImage flood_reconstruction(const GridImage& g, std::vector<Chimney> chimneys, const Neighborhood& v,
                               Value top) {
    const auto& shape = g.shape();
    const Value lo = g.min_value();
    const Value hi = std::max(top, g.max_value());
    std::stable_sort(chimneys.begin(), chimneys.end(),
                     [](const Chimney& a, const Chimney& b) { return a.level < b.level; });

    Value level = lo;
    Population pop(shape, std::size_t{hi} - lo + 1,
                   [&g, &level, lo](std::size_t y, RegionId) { return QueueIndex{std::max(g[y], level)} - lo; });
    const auto tribe = Tribe::active(v, Restriction::AllRegions);

    std::vector<Value> out(shape.size(), static_cast<Value>(kMaxValue));
    auto next = chimneys.begin();
    for (std::uint32_t l = lo; l <= hi; ++l) {
        level = static_cast<Value>(l);
        for (; next != chimneys.end() && next->level == level; ++next) {
            if (pop.owner(next->pixel)) continue;
            const auto r = pop.create_region(tribe);
            pop.grow(next->pixel, r);
            out[next->pixel] = level;
        }
        pop.queues().select_queue(l - lo);
        while (auto c = pop.pop_valid()) {
            pop.grow(c->pixel, c->region);
            out[c->pixel] = level;
        }
    }
    return GridImage(shape, std::move(out));
}

}  // namespace

GridImage geodesic_reconstruction(const GridImage& f, const GridImage& g, const Neighborhood& v) {
    if (!(f.shape() == g.shape())) {
        throw std::invalid_argument("reconstruction: marker shape " + f.shape().to_string() + " differs from mask " +
                                    g.shape().to_string());
    }
    detail::check_neighborhood(g.shape(), v);
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (f[i] < g[i]) {
            throw std::invalid_argument("reconstruction needs f >= g; violated at " +
                                        f.shape().coordinate(i).to_string());
        }
    }

    // One chimney per regional minimum of f, at its first pixel in scan order.
    const auto minima = regional_minima(f, v);
    std::vector<Chimney> chimneys;
    std::vector<bool> placed(minima.is_minimum.size(), false);
    for (std::size_t i = 0; i < f.size(); ++i) {
        const auto c = static_cast<std::size_t>(minima.components.labels[i]);
        if (minima.is_minimum[c] && !placed[c]) {
            placed[c] = true;
            chimneys.push_back({i, f[i]});
        }
    }
    return flood_reconstruction(g, std::move(chimneys), v, f.max_value());
}

GridImage dynamic_filter(const GridImage& g, std::uint32_t h, const Neighborhood& v) {
    return geodesic_reconstruction(add_saturating(g, h), g, v);
}

GridImage marker_reconstruction(const GridImage& g, const SeedList& seeds, const Neighborhood& v) {
    detail::check_neighborhood(g.shape(), v);
    const auto seed_pixels = detail::seed_indices(g.shape(), seeds, nullptr);
    std::vector<Chimney> chimneys;
    for (const auto& pixels : seed_pixels)
        for (auto px : pixels) chimneys.push_back({px, g[px]});
    if (chimneys.empty()) throw std::invalid_argument("marker reconstruction needs at least one seed pixel");
    return flood_reconstruction(g, std::move(chimneys), v, g.max_value());
}

}  // namespace popgrow
