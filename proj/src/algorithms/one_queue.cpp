#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "popgrow/algorithms.hpp"
#include "seeding.hpp"

namespace popgrow {

// --- Label map helpers -------------------------------------------------------

std::size_t LabelMap::region_count() const {
    std::set<std::int32_t> seen;
    for (auto l : labels)
        if (l >= 0) seen.insert(l);
    return seen.size();
}

std::size_t LabelMap::boundary_count() const {
    return static_cast<std::size_t>(std::count(labels.begin(), labels.end(), kBoundary));
}

std::size_t MinimaResult::minima_count() const {
    return static_cast<std::size_t>(std::count(is_minimum.begin(), is_minimum.end(), true));
}

LabelMap MinimaResult::minima_labels() const {
    std::vector<std::int32_t> renumber(is_minimum.size(), LabelMap::kUnassigned);
    std::int32_t next = 0;
    for (std::size_t r = 0; r < is_minimum.size(); ++r)
        if (is_minimum[r]) renumber[r] = next++;
    LabelMap out(components.shape);
    for (std::size_t i = 0; i < out.labels.size(); ++i) {
        const auto c = components.labels[i];
        if (c >= 0) out.labels[i] = renumber[static_cast<std::size_t>(c)];
    }
    return out;
}

// --- Voronoi tessellation ----------------------------------------------------

LabelMap voronoi(const Shape& shape, const SeedList& seeds, const Neighborhood& v, const GridImage* domain) {
    detail::check_neighborhood(shape, v);
    const auto seed_pixels = detail::seed_indices(shape, seeds, domain);

    OrderingFunction delta;
    if (domain) {
        delta = [domain](std::size_t y, RegionId) { return (*domain)[y] != 0 ? QueueIndex{0} : kOut; };
    } else {
        delta = [](std::size_t, RegionId) { return QueueIndex{0}; };
    }
    Population pop(shape, 1, std::move(delta));

    const auto boundary = pop.create_region(Tribe::passive());
    const auto tribe = Tribe::active(v, Restriction::AllRegions);
    std::vector<std::int32_t> label_of{LabelMap::kBoundary};
    for (std::size_t s = 0; s < seeds.size(); ++s) {
        const auto r = pop.create_region(tribe);
        label_of.push_back(static_cast<std::int32_t>(seeds[s].label));
        for (auto px : seed_pixels[s]) pop.grow(px, r);
    }

    pop.queues().select_queue(0);
    pop.drain_waves(GrowthPolicy::InvariantBoundary, boundary);

    LabelMap out(shape);
    for (std::size_t i = 0; i < shape.size(); ++i)
        if (auto o = pop.owner(i)) out.labels[i] = label_of[*o];
    return out;
}

// --- Domain to clusters ------------------------------------------------------

LabelMap domain_to_clusters(const GridImage& image, const Neighborhood& v) {
    const auto& shape = image.shape();
    detail::check_neighborhood(shape, v);
    std::vector<bool> inside(shape.size());
    for (std::size_t i = 0; i < shape.size(); ++i) inside[i] = image[i] != 0;

    Population pop(shape, 1, [&inside](std::size_t y, RegionId) { return inside[y] ? QueueIndex{0} : kOut; });
    const auto tribe = Tribe::active(v, Restriction::AllRegions);
    pop.queues().select_queue(0);

    for (std::size_t x = 0; x < shape.size(); ++x) {
        if (!inside[x]) continue;
        const auto r = pop.create_region(tribe);
        pop.grow(x, r);
        inside[x] = false;
        while (auto c = pop.pop_valid()) {
            pop.grow(c->pixel, c->region);
            inside[c->pixel] = false;
        }
    }

    LabelMap out(shape);
    for (std::size_t i = 0; i < shape.size(); ++i)
        if (auto o = pop.owner(i)) out.labels[i] = static_cast<std::int32_t>(*o);
    return out;
}

LabelMap remove_border_components(const LabelMap& labels) {
    std::set<std::int32_t> touching;
    for (std::size_t i = 0; i < labels.labels.size(); ++i) {
        if (labels.labels[i] >= 0 && labels.shape.on_border(i)) touching.insert(labels.labels[i]);
    }
    LabelMap out = labels;
    for (auto& l : out.labels)
        if (l >= 0 && touching.count(l)) l = LabelMap::kUnassigned;
    return out;
}

GridImage fill_holes(const GridImage& image, const Neighborhood& v) {
    const auto background = complement(image);
    const auto holes = remove_border_components(domain_to_clusters(background, v.dual()));
    std::vector<Value> out(image.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = (image[i] != 0 || holes.labels[i] >= 0) ? 1 : 0;
    return GridImage(image.shape(), std::move(out));
}

LabelMap max_cluster(const LabelMap& labels) {
    std::map<std::int32_t, std::size_t> area;
    for (auto l : labels.labels)
        if (l >= 0) ++area[l];
    LabelMap out(labels.shape);
    if (area.empty()) return out;
    auto best = area.begin();
    for (auto it = area.begin(); it != area.end(); ++it)
        if (it->second > best->second) best = it;
    for (std::size_t i = 0; i < out.labels.size(); ++i)
        if (labels.labels[i] == best->first) out.labels[i] = best->first;
    return out;
}

// --- Regional minima ---------------------------------------------------------

MinimaResult regional_minima(const GridImage& f, const Neighborhood& v) {
    const auto& shape = f.shape();
    detail::check_neighborhood(shape, v);
    Value level = 0;
    Population pop(shape, 1,
                   [&f, &level](std::size_t y, RegionId) { return f[y] <= level ? QueueIndex{0} : kOut; });
    const auto tribe = Tribe::active(v, Restriction::SelfOnly);
    pop.queues().select_queue(0);

    std::vector<bool> is_minimum;
    for (std::size_t x = 0; x < shape.size(); ++x) {
        if (pop.owner(x)) continue;
        level = f[x];
        const auto r = pop.create_region(tribe);
        pop.grow(x, r);
        bool minimum = true;
        while (auto c = pop.pop_valid()) {
            if (f[c->pixel] < level) {
                minimum = false;
            } else {
                pop.grow(c->pixel, c->region);
            }
        }
        is_minimum.push_back(minimum);
    }

    MinimaResult out{LabelMap(shape), std::move(is_minimum)};
    for (std::size_t i = 0; i < shape.size(); ++i) out.components.labels[i] = static_cast<std::int32_t>(*pop.owner(i));
    return out;
}

}  // namespace popgrow
