#include "popgrow/engine.hpp"

#include <algorithm>

namespace popgrow {

// --- SystemQueue -------------------------------------------------------------

SystemQueue::SystemQueue(std::size_t queue_count) : queues_(queue_count) {
    if (queue_count == 0) throw std::invalid_argument("system queue needs at least one queue");
}

void SystemQueue::push(QueueIndex q, Couple c) {
    if (q == kOut) return;
    if (q >= queues_.size()) {
        throw std::out_of_range("queue index " + std::to_string(q) + " >= " + std::to_string(queues_.size()));
    }
    queues_[q].items.push_back(Packed{static_cast<std::uint32_t>(c.pixel), c.region});
    ++stored_;
}

void SystemQueue::select_queue(QueueIndex q) {
    if (q >= queues_.size()) {
        throw std::out_of_range("queue index " + std::to_string(q) + " >= " + std::to_string(queues_.size()));
    }
    selected_ = q;
}

bool SystemQueue::empty(QueueIndex q) const { return size(q) == 0; }

std::size_t SystemQueue::size(QueueIndex q) const {
    const auto& f = queues_.at(q);
    return f.items.size() - f.head;
}

std::optional<Couple> SystemQueue::pop() {
    auto& f = queues_[selected_];
    if (f.head == f.items.size()) return std::nullopt;
    const Couple c{f.items[f.head].pixel, f.items[f.head].region};
    ++f.head;
    --stored_;
    if (f.head == f.items.size()) {
        f.items.clear();
        f.head = 0;
    } else if (f.head >= 4096 && 2 * f.head >= f.items.size()) {
        f.items.erase(f.items.begin(), f.items.begin() + static_cast<std::ptrdiff_t>(f.head));
        f.head = 0;
    }
    return c;
}

// --- Population --------------------------------------------------------------

Population::Population(Shape shape, std::size_t queue_count, OrderingFunction delta)
    : shape_(shape),
      queues_(queue_count),
      delta_(std::move(delta)),
      px_(shape.size()) {
    if (!delta_) throw std::invalid_argument("population needs an ordering function");
    if (shape.size() > std::numeric_limits<std::uint32_t>::max()) {
        throw std::length_error("grid of " + std::to_string(shape.size()) + " pixels is too large");
    }
}

std::uint32_t Population::tribe_index(const Tribe& tribe) {
    for (std::uint32_t t = 0; t < tribes_.size(); ++t) {
        if (tribes_[t].tribe == tribe) return t;
    }
    CompiledTribe compiled{tribe, {}, {}, {}};
    if (tribe.is_active()) {
        const auto& v = tribe.neighborhood();
        if (v.rank() != shape_.rank()) {
            throw std::invalid_argument("neighborhood rank " + std::to_string(v.rank()) +
                                        " does not match grid rank " + std::to_string(shape_.rank()));
        }
        for (const auto& o : v.offsets()) {
            std::array<std::int64_t, kMaxRank> comp{};
            std::int64_t linear = 0;
            for (std::size_t a = 0; a < shape_.rank(); ++a) {
                comp[a] = o[a];
                compiled.reach[a] = std::max(compiled.reach[a], o[a] < 0 ? -o[a] : o[a]);
                linear += o[a] * static_cast<std::int64_t>(shape_.stride(a));
            }
            compiled.linear.push_back(linear);
            compiled.axis.push_back(comp);
        }
    }
    tribes_.push_back(std::move(compiled));
    return static_cast<std::uint32_t>(tribes_.size() - 1);
}

RegionId Population::create_region(const Tribe& tribe) {
    if (region_tribe_.size() >= kNone) throw std::length_error("too many regions");
    region_tribe_.push_back(tribe_index(tribe));
    return static_cast<RegionId>(region_tribe_.size() - 1);
}

const Tribe& Population::tribe(RegionId region) const {
    return tribes_.at(region_tribe_.at(region)).tribe;
}

bool Population::in_zone(std::size_t pixel, RegionId region) const noexcept {
    if (px_[pixel].zone_first == region) return true;
    for (auto n = px_[pixel].zone_overflow; n != kNil; n = nodes_[n].next) {
        if (nodes_[n].region == region) return true;
    }
    return false;
}

std::size_t Population::zone_size(std::size_t pixel) const noexcept {
    std::size_t count = px_[pixel].zone_first != kNone ? 1 : 0;
    for (auto n = px_[pixel].zone_overflow; n != kNil; n = nodes_[n].next) ++count;
    return count;
}

std::optional<RegionId> Population::zone_min(std::size_t pixel) const noexcept {
    if (px_[pixel].zone_first == kNone) return std::nullopt;
    std::optional<RegionId> best = px_[pixel].zone_first;
    for (auto n = px_[pixel].zone_overflow; n != kNil; n = nodes_[n].next) {
        if (!best || nodes_[n].region < *best) best = nodes_[n].region;
    }
    return best;
}

std::vector<RegionId> Population::zone_members(std::size_t pixel) const {
    std::vector<RegionId> out;
    if (px_[pixel].zone_first != kNone) out.push_back(px_[pixel].zone_first);
    for (auto n = px_[pixel].zone_overflow; n != kNil; n = nodes_[n].next) out.push_back(nodes_[n].region);
    std::sort(out.begin(), out.end());
    return out;
}

void Population::zone_insert(std::size_t pixel, RegionId region) {
    if (px_[pixel].zone_first == kNone) {
        px_[pixel].zone_first = region;
        return;
    }
    std::uint32_t n;
    if (free_node_ != kNil) {
        n = free_node_;
        free_node_ = nodes_[n].next;
        nodes_[n] = ZoneNode{region, px_[pixel].zone_overflow};
    } else {
        if (nodes_.size() >= kNil) throw std::length_error("zone node pool exhausted");
        n = static_cast<std::uint32_t>(nodes_.size());
        nodes_.push_back(ZoneNode{region, px_[pixel].zone_overflow});
    }
    px_[pixel].zone_overflow = n;
}

void Population::grow(std::size_t pixel, RegionId region) {
    if (pixel >= px_.size()) throw std::out_of_range("pixel index outside grid");
    if (region >= region_tribe_.size()) throw std::out_of_range("unknown region " + std::to_string(region));
    if (px_[pixel].owner != kNone) {
        throw ContractViolation("grow of region " + std::to_string(region) + " onto pixel " +
                                shape_.coordinate(pixel).to_string() + " owned by region " +
                                std::to_string(px_[pixel].owner));
    }
    px_[pixel].owner = region;

    // The pixel now belongs to X_region: it leaves Z_region, and the zone of
    // every region that excludes all owned pixels.
    auto leaves = [&](RegionId j) {
        return j == region || tribes_[region_tribe_[j]].tribe.restriction() == Restriction::AllRegions;
    };
    if (px_[pixel].zone_first != kNone && leaves(px_[pixel].zone_first)) px_[pixel].zone_first = kNone;
    auto* link = &px_[pixel].zone_overflow;
    while (*link != kNil) {
        const auto n = *link;
        if (leaves(nodes_[n].region)) {
            *link = nodes_[n].next;
            nodes_[n].next = free_node_;
            free_node_ = n;
        } else {
            link = &nodes_[n].next;
        }
    }
    if (px_[pixel].zone_first == kNone && px_[pixel].zone_overflow != kNil) {
        const auto n = px_[pixel].zone_overflow;
        px_[pixel].zone_first = nodes_[n].region;
        px_[pixel].zone_overflow = nodes_[n].next;
        nodes_[n].next = free_node_;
        free_node_ = n;
    }

    const auto& compiled = tribes_[region_tribe_[region]];
    if (!compiled.tribe.is_active()) return;
    const bool exclude_all = compiled.tribe.restriction() == Restriction::AllRegions;

    const auto rank = shape_.rank();
    std::array<std::int64_t, kMaxRank> coord{};
    {
        auto rest = pixel;
        for (std::size_t a = 0; a < rank; ++a) {
            coord[a] = static_cast<std::int64_t>(rest % shape_.extent(a));
            rest /= shape_.extent(a);
        }
    }
    bool interior = true;
    for (std::size_t a = 0; a < rank; ++a) {
        if (coord[a] < compiled.reach[a] ||
            coord[a] + compiled.reach[a] >= static_cast<std::int64_t>(shape_.extent(a)))
            interior = false;
    }
    for (std::size_t k = 0; k < compiled.linear.size(); ++k) {
        bool inside = true;
        for (std::size_t a = 0; a < rank && !interior; ++a) {
            const auto c = coord[a] + compiled.axis[k][a];
            if (c < 0 || c >= static_cast<std::int64_t>(shape_.extent(a))) {
                inside = false;
                break;
            }
        }
        if (!inside) continue;
        const auto y = static_cast<std::size_t>(static_cast<std::int64_t>(pixel) + compiled.linear[k]);
        const auto oy = px_[y].owner;
        if (exclude_all ? oy != kNone : oy == region) continue;
        if (in_zone(y, region)) continue;
        zone_insert(y, region);
        queues_.push(delta_(y, region), Couple{y, region});
    }
}

std::optional<Couple> Population::pop_valid() {
    while (auto c = queues_.pop()) {
        if (in_zone(c->pixel, c->region)) return c;
    }
    return std::nullopt;
}

std::vector<Couple> Population::pop_wave() {
    std::vector<Couple> wave;
    collect_wave(wave);
    return wave;
}

void Population::collect_wave(std::vector<Couple>& wave) {
    wave.clear();
    for (auto n = queues_.size(queues_.selected()); n > 0; --n) {
        const auto c = *queues_.pop();
        if (!in_zone(c.pixel, c.region)) continue;
        auto& slot = px_[c.pixel].wave_slot;
        if (slot == kNil) {
            slot = static_cast<std::uint32_t>(wave.size());
            wave.push_back(c);
        } else if (c.region < wave[slot].region) {
            wave[slot].region = c.region;
        }
    }
    for (const auto& c : wave) px_[c.pixel].wave_slot = kNil;
}

RegionId Population::decide(Couple couple, GrowthPolicy policy, RegionId boundary) const {
    RegionId target = couple.region;
    switch (policy) {
        case GrowthPolicy::Plain:
            break;
        case GrowthPolicy::InvariantBoundary:
            if (zone_size(couple.pixel) >= 2) target = boundary;
            break;
        case GrowthPolicy::WatershedBoundary:
            if (zone_size(couple.pixel) >= 2 && zone_min(couple.pixel) == couple.region) target = boundary;
            break;
    }
    return target;
}

RegionId Population::apply_policy(Couple couple, GrowthPolicy policy, RegionId boundary) {
    const auto target = decide(couple, policy, boundary);
    grow(couple.pixel, target);
    return target;
}

std::size_t Population::drain_waves(GrowthPolicy policy, RegionId boundary) {
    std::size_t grown = 0;
    while (!queues_.empty()) {
        collect_wave(wave_);
        targets_.resize(wave_.size());
        for (std::size_t k = 0; k < wave_.size(); ++k) targets_[k] = decide(wave_[k], policy, boundary);
        for (std::size_t k = 0; k < wave_.size(); ++k) grow(wave_[k].pixel, targets_[k]);
        grown += wave_.size();
    }
    return grown;
}

}  // namespace popgrow
