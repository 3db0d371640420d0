#pragma once

// Seeded region growing by pixel aggregation.
//
// A Population owns a set of regions X_i, each with a zone of influence Z_i
// on its outer boundary, and a SystemQueue that schedules candidate
// (pixel, region) couples. The ordering function decides which queue a
// couple goes to, or OUT to drop it. Algorithms drive the population by
// selecting queues, popping valid couples and growing regions on them.

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "popgrow/grid.hpp"

namespace popgrow {

using RegionId = std::uint32_t;
using QueueIndex = std::size_t;

/// Ordering function result meaning "never enqueue this couple".
inline constexpr QueueIndex kOut = std::numeric_limits<QueueIndex>::max();

/// Raised when the engine is asked to do something no algorithm should ever
/// request, e.g. growing a region onto an owned pixel.
class ContractViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

enum class Restriction {
    AllRegions,  // Z_i = (X_i + V) \ union_j X_j
    SelfOnly,    // Z_i = (X_i + V) \ X_i
};

/// Zone-of-influence policy of a region.
class Tribe {
public:
    static Tribe passive() { return Tribe(); }
    static Tribe active(Neighborhood v, Restriction restriction = Restriction::AllRegions) {
        return Tribe(std::move(v), restriction);
    }

    [[nodiscard]] bool is_active() const noexcept { return neighborhood_.has_value(); }
    [[nodiscard]] const Neighborhood& neighborhood() const { return neighborhood_.value(); }
    [[nodiscard]] Restriction restriction() const noexcept { return restriction_; }

    friend bool operator==(const Tribe&, const Tribe&) = default;

private:
    Tribe() = default;
    Tribe(Neighborhood v, Restriction r) : neighborhood_(std::move(v)), restriction_(r) {}

    std::optional<Neighborhood> neighborhood_;
    Restriction restriction_ = Restriction::AllRegions;
};

struct Couple {
    std::size_t pixel = 0;
    RegionId region = 0;

    friend bool operator==(const Couple&, const Couple&) = default;
};

/// Bank of FIFO queues with one selected queue.
class SystemQueue {
public:
    explicit SystemQueue(std::size_t queue_count);

    [[nodiscard]] std::size_t queue_count() const noexcept { return queues_.size(); }

    /// Appends to queue `q`; kOut is a no-op. Throws std::out_of_range for
    /// any other index >= queue_count().
    void push(QueueIndex q, Couple c);

    void select_queue(QueueIndex q);
    [[nodiscard]] QueueIndex selected() const noexcept { return selected_; }

    /// Emptiness counts stored couples, stale or not.
    [[nodiscard]] bool empty() const noexcept { return empty(selected_); }
    [[nodiscard]] bool empty(QueueIndex q) const;
    [[nodiscard]] bool all_empty() const noexcept { return stored_ == 0; }
    [[nodiscard]] std::size_t size(QueueIndex q) const;

    /// Front couple of the selected queue, in push order.
    std::optional<Couple> pop();

private:
    struct Packed {
        std::uint32_t pixel;
        RegionId region;
    };
    struct Fifo {
        std::vector<Packed> items;
        std::size_t head = 0;
    };

    std::vector<Fifo> queues_;
    QueueIndex selected_ = 0;
    std::size_t stored_ = 0;
};

/// delta(pixel, region) -> queue index or kOut.
using OrderingFunction = std::function<QueueIndex(std::size_t pixel, RegionId region)>;

enum class GrowthPolicy {
    Plain,              // always grow the popped region
    InvariantBoundary,  // any contention (|Z(x)| >= 2) grows the boundary
    WatershedBoundary,  // contention grows the boundary only when popped by min Z(x)
};

class Population {
public:
    Population(Shape shape, std::size_t queue_count, OrderingFunction delta);

    [[nodiscard]] const Shape& shape() const noexcept { return shape_; }
    [[nodiscard]] SystemQueue& queues() noexcept { return queues_; }
    [[nodiscard]] const SystemQueue& queues() const noexcept { return queues_; }

    /// New empty region; ids are dense in creation order.
    RegionId create_region(const Tribe& tribe);
    [[nodiscard]] std::size_t region_count() const noexcept { return region_tribe_.size(); }
    [[nodiscard]] const Tribe& tribe(RegionId region) const;

    /// Adds an unowned pixel to a region and updates every zone of influence.
    /// Neighbors entering Z_region for the first time are pushed to
    /// delta(neighbor, region). Throws ContractViolation if the pixel is owned.
    void grow(std::size_t pixel, RegionId region);
    void grow(const Coordinate& x, RegionId region) { grow(shape_.index(x), region); }

    /// Pops the selected queue until a couple with pixel in Z_region shows up.
    std::optional<Couple> pop_valid();

    /// Pops every couple stored in the selected queue at call time and keeps
    /// one valid couple per pixel, the one with the smallest region, in order
    /// of first appearance. Nothing grows; the zones stay as they were when
    /// the wave began.
    std::vector<Couple> pop_wave();
    /// Region that `policy` selects for a valid couple, without growing it.
    [[nodiscard]] RegionId decide(Couple couple, GrowthPolicy policy, RegionId boundary) const;
    /// Grows by `policy` on a valid couple; returns the region actually grown.
    RegionId apply_policy(Couple couple, GrowthPolicy policy, RegionId boundary);
    /// Drains the selected queue wave by wave: all couples of a wave are
    /// decided first, then grown. Returns the number of pixels grown.
    std::size_t drain_waves(GrowthPolicy policy, RegionId boundary);

    [[nodiscard]] std::optional<RegionId> owner(std::size_t pixel) const noexcept {
        const auto o = px_[pixel].owner;
        return o == kNone ? std::nullopt : std::optional<RegionId>(o);
    }
    [[nodiscard]] std::size_t zone_size(std::size_t pixel) const noexcept;
    [[nodiscard]] bool in_zone(std::size_t pixel, RegionId region) const noexcept;
    /// Smallest region id whose zone holds the pixel.
    [[nodiscard]] std::optional<RegionId> zone_min(std::size_t pixel) const noexcept;
    /// Regions whose zone holds the pixel, ascending.
    [[nodiscard]] std::vector<RegionId> zone_members(std::size_t pixel) const;

private:
    static constexpr RegionId kNone = std::numeric_limits<RegionId>::max();
    static constexpr std::uint32_t kNil = std::numeric_limits<std::uint32_t>::max();

    struct CompiledTribe {
        Tribe tribe;
        std::vector<std::int64_t> linear;           // per-offset linear delta
        std::vector<std::array<std::int64_t, kMaxRank>> axis;  // per-offset components
        std::array<std::int64_t, kMaxRank> reach{};             // max |component| per axis
    };

    struct ZoneNode {
        RegionId region;
        std::uint32_t next;
    };

    std::uint32_t tribe_index(const Tribe& tribe);
    void zone_insert(std::size_t pixel, RegionId region);
    void collect_wave(std::vector<Couple>& wave);

    Shape shape_;
    SystemQueue queues_;
    OrderingFunction delta_;
    std::vector<CompiledTribe> tribes_;
    std::vector<std::uint32_t> region_tribe_;
    // Z(x) is zone_first followed by the node list starting at zone_overflow.
    struct PixelState {
        RegionId owner = kNone;
        RegionId zone_first = kNone;
        std::uint32_t zone_overflow = kNil;
        std::uint32_t wave_slot = kNil;
    };
    std::vector<PixelState> px_;
    std::vector<ZoneNode> nodes_;
    std::uint32_t free_node_ = kNil;
    std::vector<Couple> wave_;
    std::vector<RegionId> targets_;
};

}  // namespace popgrow
