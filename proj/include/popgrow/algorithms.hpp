#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "popgrow/engine.hpp"
#include "popgrow/grid.hpp"

namespace popgrow {

/// Per-pixel label: a region label >= 0, kBoundary, or kUnassigned.
struct LabelMap {
    static constexpr std::int32_t kUnassigned = -1;
    static constexpr std::int32_t kBoundary = -2;

    Shape shape;
    std::vector<std::int32_t> labels;

    LabelMap() = default;
    explicit LabelMap(Shape s) : shape(s), labels(s.size(), kUnassigned) {}

    [[nodiscard]] std::int32_t at(const Coordinate& x) const { return labels[shape.index(x)]; }
    /// Number of distinct region labels present.
    [[nodiscard]] std::size_t region_count() const;
    [[nodiscard]] std::size_t boundary_count() const;

    friend bool operator==(const LabelMap&, const LabelMap&) = default;
};

struct DistanceMap {
    static constexpr std::uint32_t kUnreached = std::numeric_limits<std::uint32_t>::max();

    Shape shape;
    std::vector<std::uint32_t> values;

    [[nodiscard]] std::uint32_t at(const Coordinate& x) const { return values[shape.index(x)]; }

    friend bool operator==(const DistanceMap&, const DistanceMap&) = default;
};

/// Decomposition into level-connected sets plus the regional minima among them.
struct MinimaResult {
    LabelMap components;            // component id per pixel, ids in scan order
    std::vector<bool> is_minimum;   // indexed by component id

    [[nodiscard]] std::size_t minima_count() const;
    /// Label map keeping only regional minima, renumbered 0..m-1 in id order.
    [[nodiscard]] LabelMap minima_labels() const;
};

// --- One queue ---------------------------------------------------------------

/// Geodesic dilation from the seeds at constant speed; pixels reached by two
/// regions in the same wave become boundary. With `domain`, growth stays in I != 0.
[[nodiscard]] LabelMap voronoi(const Shape& shape, const SeedList& seeds, const Neighborhood& v,
                               const GridImage* domain = nullptr);

/// Connected components of I != 0, labelled in scan order of their first pixel.
[[nodiscard]] LabelMap domain_to_clusters(const GridImage& image, const Neighborhood& v);

/// Drops every component with a pixel on the grid border. Labels are kept.
[[nodiscard]] LabelMap remove_border_components(const LabelMap& labels);

/// Sets to 1 every background component (taken with the dual connectivity)
/// that does not touch the grid border. Output is binary 0/1.
[[nodiscard]] GridImage fill_holes(const GridImage& image, const Neighborhood& v);

/// Keeps the component of largest area; ties go to the smallest label.
[[nodiscard]] LabelMap max_cluster(const LabelMap& labels);

[[nodiscard]] MinimaResult regional_minima(const GridImage& f, const Neighborhood& v);

// --- n queues ----------------------------------------------------------------

/// Geodesic distance to the seeds via a flip-flop pair of queues.
[[nodiscard]] DistanceMap distance(const Shape& shape, const SeedList& seeds, const Neighborhood& v,
                                   const GridImage* domain = nullptr);

/// Seeded watershed by flooding, ordered by max(level, f(x)). Pixels reached
/// by two basins in the same wave of a level become boundary. Seeds are
/// created in list order; the result does not depend on that order.
[[nodiscard]] LabelMap watershed(const GridImage& f, const SeedList& seeds, const Neighborhood& v,
                                 const GridImage* domain = nullptr);

/// Reconstruction by erosion of mask g from marker f >= g.
[[nodiscard]] GridImage geodesic_reconstruction(const GridImage& f, const GridImage& g, const Neighborhood& v);

/// Reconstruction of g from g + h: fills valleys shallower than h.
[[nodiscard]] GridImage dynamic_filter(const GridImage& g, std::uint32_t h, const Neighborhood& v);

/// Reconstruction of g from a marker equal to g on the seed pixels and
/// infinite elsewhere.
[[nodiscard]] GridImage marker_reconstruction(const GridImage& g, const SeedList& seeds, const Neighborhood& v);

}  // namespace popgrow
