#include "popgrow/grid.hpp"

#include <algorithm>
#include <sstream>

namespace popgrow {

// --- Coordinate --------------------------------------------------------------

Coordinate::Coordinate(std::initializer_list<std::int64_t> components)
    : Coordinate(std::span<const std::int64_t>(components.begin(), components.size())) {}

Coordinate::Coordinate(std::span<const std::int64_t> components) {
    if (components.empty() || components.size() > kMaxRank) {
        throw std::invalid_argument("coordinate rank must be 1..3");
    }
    rank_ = components.size();
    std::copy(components.begin(), components.end(), c_.begin());
}

bool Coordinate::is_zero() const noexcept {
    return std::all_of(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(rank_),
                       [](std::int64_t v) { return v == 0; });
}

Coordinate Coordinate::operator+(const Coordinate& other) const {
    if (other.rank_ != rank_) throw std::invalid_argument("coordinate rank mismatch");
    Coordinate out = *this;
    for (std::size_t a = 0; a < rank_; ++a) out.c_[a] += other.c_[a];
    return out;
}

Coordinate Coordinate::operator-() const {
    Coordinate out = *this;
    for (std::size_t a = 0; a < rank_; ++a) out.c_[a] = -out.c_[a];
    return out;
}

std::string Coordinate::to_string() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t a = 0; a < rank_; ++a) {
        if (a) os << ',';
        os << c_[a];
    }
    os << ')';
    return os.str();
}

// --- Shape -------------------------------------------------------------------

Shape::Shape(std::initializer_list<std::size_t> extents)
    : Shape(std::span<const std::size_t>(extents.begin(), extents.size())) {}

Shape::Shape(std::span<const std::size_t> extents) {
    if (extents.empty() || extents.size() > kMaxRank) {
        throw std::invalid_argument("shape rank must be 1..3");
    }
    rank_ = extents.size();
    size_ = 1;
    for (std::size_t a = 0; a < rank_; ++a) {
        if (extents[a] == 0) throw std::invalid_argument("shape extent must be >= 1");
        extents_[a] = extents[a];
        strides_[a] = size_;
        size_ *= extents[a];
    }
}

bool Shape::contains(const Coordinate& x) const noexcept {
    if (x.rank() != rank_) return false;
    for (std::size_t a = 0; a < rank_; ++a) {
        if (x[a] < 0 || static_cast<std::size_t>(x[a]) >= extents_[a]) return false;
    }
    return true;
}

std::size_t Shape::index(const Coordinate& x) const {
    if (!contains(x)) {
        throw std::out_of_range("coordinate " + x.to_string() + " outside " + to_string());
    }
    std::size_t i = 0;
    for (std::size_t a = 0; a < rank_; ++a) i += static_cast<std::size_t>(x[a]) * strides_[a];
    return i;
}

Coordinate Shape::coordinate(std::size_t index) const {
    std::array<std::int64_t, kMaxRank> c{};
    for (std::size_t a = 0; a < rank_; ++a) {
        c[a] = static_cast<std::int64_t>(index % extents_[a]);
        index /= extents_[a];
    }
    return Coordinate(std::span<const std::int64_t>(c.data(), rank_));
}

bool Shape::on_border(std::size_t index) const noexcept {
    for (std::size_t a = 0; a < rank_; ++a) {
        const auto c = index % extents_[a];
        index /= extents_[a];
        if (c == 0 || c + 1 == extents_[a]) return true;
    }
    return false;
}

std::string Shape::to_string() const {
    std::ostringstream os;
    for (std::size_t a = 0; a < rank_; ++a) {
        if (a) os << 'x';
        os << extents_[a];
    }
    return os.str();
}

// --- GridImage ---------------------------------------------------------------

GridImage::GridImage(Shape shape, Value fill)
    : shape_(shape), values_(shape.size(), fill) {}

GridImage::GridImage(Shape shape, std::vector<Value> values)
    : shape_(shape), values_(std::move(values)) {
    if (values_.size() != shape_.size()) {
        throw std::invalid_argument("image has " + std::to_string(values_.size()) +
                                    " values, shape " + shape_.to_string() + " needs " +
                                    std::to_string(shape_.size()));
    }
}

Value GridImage::min_value() const noexcept {
    return values_.empty() ? Value{0} : *std::min_element(values_.begin(), values_.end());
}

Value GridImage::max_value() const noexcept {
    return values_.empty() ? Value{0} : *std::max_element(values_.begin(), values_.end());
}

bool GridImage::is_binary() const noexcept {
    Value foreground = 0;
    for (Value v : values_) {
        if (v == 0) continue;
        if (foreground == 0) {
            foreground = v;
        } else if (v != foreground) {
            return false;
        }
    }
    return true;
}

// --- Neighborhood ------------------------------------------------------------

Neighborhood::Neighborhood(std::vector<Coordinate> offsets, NeighborhoodKind kind)
    : offsets_(std::move(offsets)), kind_(kind) {
    rank_ = offsets_.empty() ? 0 : offsets_.front().rank();
}

Neighborhood Neighborhood::from_offsets(std::vector<Coordinate> offsets) {
    if (offsets.empty()) throw std::invalid_argument("neighborhood needs at least one offset");
    const auto rank = offsets.front().rank();
    for (const auto& o : offsets) {
        if (o.rank() != rank) throw std::invalid_argument("neighborhood offsets differ in rank");
        if (o.is_zero()) throw std::invalid_argument("neighborhood contains the zero offset");
        if (std::count(offsets.begin(), offsets.end(), o) != 1) {
            throw std::invalid_argument("duplicate neighborhood offset " + o.to_string());
        }
        if (std::find(offsets.begin(), offsets.end(), -o) == offsets.end()) {
            throw std::invalid_argument("neighborhood not symmetric: missing " +
                                        (-o).to_string());
        }
    }
    return Neighborhood(std::move(offsets), NeighborhoodKind::Custom);
}

Neighborhood Neighborhood::line() {
    return Neighborhood({Coordinate{-1}, Coordinate{1}}, NeighborhoodKind::Line);
}

Neighborhood Neighborhood::four() {
    return Neighborhood({{-1, 0}, {1, 0}, {0, -1}, {0, 1}}, NeighborhoodKind::Four);
}

Neighborhood Neighborhood::eight() {
    std::vector<Coordinate> offsets;
    for (std::int64_t dy = -1; dy <= 1; ++dy)
        for (std::int64_t dx = -1; dx <= 1; ++dx)
            if (dx || dy) offsets.push_back({dx, dy});
    return Neighborhood(std::move(offsets), NeighborhoodKind::Eight);
}

Neighborhood Neighborhood::six() {
    return Neighborhood({{-1, 0, 0}, {1, 0, 0}, {0, -1, 0}, {0, 1, 0}, {0, 0, -1}, {0, 0, 1}},
                        NeighborhoodKind::Six);
}

Neighborhood Neighborhood::twenty_six() {
    std::vector<Coordinate> offsets;
    for (std::int64_t dz = -1; dz <= 1; ++dz)
        for (std::int64_t dy = -1; dy <= 1; ++dy)
            for (std::int64_t dx = -1; dx <= 1; ++dx)
                if (dx || dy || dz) offsets.push_back({dx, dy, dz});
    return Neighborhood(std::move(offsets), NeighborhoodKind::TwentySix);
}

Neighborhood Neighborhood::from_count(int count) {
    switch (count) {
        case 4: return four();
        case 8: return eight();
        case 6: return six();
        case 26: return twenty_six();
        default:
            throw std::invalid_argument("unsupported neighborhood " + std::to_string(count) +
                                        " (expected 4, 8, 6 or 26)");
    }
}

Neighborhood Neighborhood::dual() const {
    switch (kind_) {
        case NeighborhoodKind::Line: return line();
        case NeighborhoodKind::Four: return eight();
        case NeighborhoodKind::Eight: return four();
        case NeighborhoodKind::Six: return twenty_six();
        case NeighborhoodKind::TwentySix: return six();
        case NeighborhoodKind::Custom: break;
    }
    throw std::invalid_argument("custom neighborhood has no dual connectivity");
}

// --- Pixel operations --------------------------------------------------------

std::vector<Coordinate> neighbors(const Coordinate& x, const Neighborhood& v,
                                  const Shape& shape) {
    if (!shape.contains(x)) {
        throw std::out_of_range("coordinate " + x.to_string() + " outside " + shape.to_string());
    }
    std::vector<Coordinate> out;
    out.reserve(v.size());
    for (const auto& o : v.offsets()) {
        auto y = x + o;
        if (shape.contains(y)) out.push_back(y);
    }
    return out;
}

GridImage add_saturating(const GridImage& g, std::uint32_t h) {
    std::vector<Value> out(g.values().begin(), g.values().end());
    for (auto& v : out) v = static_cast<Value>(std::min<std::uint64_t>(v + std::uint64_t{h}, kMaxValue));
    return GridImage(g.shape(), std::move(out));
}

GridImage complement(const GridImage& image) {
    if (!image.is_binary()) throw std::invalid_argument("complement requires a binary image");
    std::vector<Value> out(image.size());
    for (std::size_t i = 0; i < image.size(); ++i) out[i] = image[i] == 0 ? 1 : 0;
    return GridImage(image.shape(), std::move(out));
}

}  // namespace popgrow
