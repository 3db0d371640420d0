#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace popgrow {

inline constexpr std::size_t kMaxRank = 3;
inline constexpr std::uint32_t kMaxValue = 65535;

using Value = std::uint16_t;

/// Lattice point (or lattice offset) with one integer component per axis.
/// Axis 0 is x (fastest varying), axis 1 is y, axis 2 is z.
class Coordinate {
public:
    Coordinate() = default;
    Coordinate(std::initializer_list<std::int64_t> components);
    explicit Coordinate(std::span<const std::int64_t> components);

    [[nodiscard]] std::size_t rank() const noexcept { return rank_; }
    [[nodiscard]] std::int64_t operator[](std::size_t axis) const noexcept { return c_[axis]; }
    [[nodiscard]] std::int64_t& operator[](std::size_t axis) noexcept { return c_[axis]; }
    [[nodiscard]] bool is_zero() const noexcept;

    [[nodiscard]] Coordinate operator+(const Coordinate& other) const;
    [[nodiscard]] Coordinate operator-() const;
    friend bool operator==(const Coordinate&, const Coordinate&) = default;

    [[nodiscard]] std::string to_string() const;

private:
    std::array<std::int64_t, kMaxRank> c_{};
    std::size_t rank_ = 0;
};

/// Extents of a grid, 1 to 3 axes. Linear addressing is row-major with
/// x fastest and the last axis slowest.
class Shape {
public:
    Shape() = default;
    Shape(std::initializer_list<std::size_t> extents);
    explicit Shape(std::span<const std::size_t> extents);

    [[nodiscard]] std::size_t rank() const noexcept { return rank_; }
    [[nodiscard]] std::size_t extent(std::size_t axis) const noexcept { return extents_[axis]; }
    [[nodiscard]] std::size_t size() const noexcept { return size_; }
    [[nodiscard]] std::size_t stride(std::size_t axis) const noexcept { return strides_[axis]; }

    [[nodiscard]] bool contains(const Coordinate& x) const noexcept;
    [[nodiscard]] std::size_t index(const Coordinate& x) const;
    [[nodiscard]] Coordinate coordinate(std::size_t index) const;
    /// True when the pixel lies on the first or last slice of any axis.
    [[nodiscard]] bool on_border(std::size_t index) const noexcept;

    friend bool operator==(const Shape& a, const Shape& b) noexcept {
        return a.rank_ == b.rank_ && a.extents_ == b.extents_;
    }

    [[nodiscard]] std::string to_string() const;  // "WxH[xD]"

private:
    std::array<std::size_t, kMaxRank> extents_{1, 1, 1};
    std::array<std::size_t, kMaxRank> strides_{0, 0, 0};
    std::size_t rank_ = 0;
    std::size_t size_ = 0;
};

/// Dense scalar image, values in 0..65535.
class GridImage {
public:
    GridImage() = default;
    explicit GridImage(Shape shape, Value fill = 0);
    GridImage(Shape shape, std::vector<Value> values);

    [[nodiscard]] const Shape& shape() const noexcept { return shape_; }
    [[nodiscard]] std::size_t size() const noexcept { return values_.size(); }
    [[nodiscard]] std::span<const Value> values() const noexcept { return values_; }
    [[nodiscard]] Value operator[](std::size_t index) const noexcept { return values_[index]; }
    [[nodiscard]] Value at(const Coordinate& x) const { return values_[shape_.index(x)]; }

    [[nodiscard]] Value min_value() const noexcept;
    [[nodiscard]] Value max_value() const noexcept;
    [[nodiscard]] bool is_binary() const noexcept;

    friend bool operator==(const GridImage&, const GridImage&) = default;

private:
    Shape shape_;
    std::vector<Value> values_;
};

enum class NeighborhoodKind { Line, Four, Eight, Six, TwentySix, Custom };

/// Symmetric structuring element without its center.
class Neighborhood {
public:
    /// Throws std::invalid_argument when an offset is zero, ranks differ,
    /// or the set is not closed under negation.
    static Neighborhood from_offsets(std::vector<Coordinate> offsets);

    static Neighborhood line();        // 1D {-1, +1}
    static Neighborhood four();        // 2D, norm 1
    static Neighborhood eight();       // 2D, norm infinity
    static Neighborhood six();         // 3D, norm 1
    static Neighborhood twenty_six();  // 3D, norm infinity
    /// 4, 8, 6 or 26; anything else throws std::invalid_argument.
    static Neighborhood from_count(int count);

    [[nodiscard]] std::span<const Coordinate> offsets() const noexcept { return offsets_; }
    [[nodiscard]] std::size_t size() const noexcept { return offsets_.size(); }
    [[nodiscard]] std::size_t rank() const noexcept { return rank_; }
    [[nodiscard]] NeighborhoodKind kind() const noexcept { return kind_; }

    /// Complementary connectivity used for background components
    /// (4 <-> 8, 6 <-> 26). Custom neighborhoods have none.
    [[nodiscard]] Neighborhood dual() const;

    friend bool operator==(const Neighborhood&, const Neighborhood&) = default;

private:
    Neighborhood(std::vector<Coordinate> offsets, NeighborhoodKind kind);

    std::vector<Coordinate> offsets_;
    std::size_t rank_ = 0;
    NeighborhoodKind kind_ = NeighborhoodKind::Custom;
};

/// x + o for every offset o of v that stays inside the grid, in offset order.
[[nodiscard]] std::vector<Coordinate> neighbors(const Coordinate& x, const Neighborhood& v,
                                                const Shape& shape);

/// Per-pixel min(g + h, 65535).
[[nodiscard]] GridImage add_saturating(const GridImage& g, std::uint32_t h);

/// 1 where I = 0, 0 elsewhere. Rejects non-binary input.
[[nodiscard]] GridImage complement(const GridImage& image);

/// A labelled seed; a seed may hold any number of pixels.
struct Seed {
    std::uint32_t label = 0;
    std::vector<Coordinate> pixels;

    friend bool operator==(const Seed&, const Seed&) = default;
};

using SeedList = std::vector<Seed>;

}  // namespace popgrow
