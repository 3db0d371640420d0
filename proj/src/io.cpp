#include "popgrow/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iterator>
#include <map>
#include <ostream>
#include <sstream>
#include <unordered_map>

namespace popgrow {

FormatError::FormatError(const std::string& what, std::size_t offset)
    : std::runtime_error(what + " (at byte " + std::to_string(offset) + ")"), message_(what), offset_(offset) {}

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f'; }

class Cursor {
public:
    explicit Cursor(const std::string& data) : data_(data) {}

    [[nodiscard]] std::size_t pos() const noexcept { return pos_; }
    [[nodiscard]] std::size_t remaining() const noexcept { return data_.size() - pos_; }
    [[nodiscard]] const char* here() const noexcept { return data_.data() + pos_; }
    void advance(std::size_t n) noexcept { pos_ += n; }

    // Skips whitespace and '#' comments (netpbm header convention).
    void skip_space_and_comments() {
        while (pos_ < data_.size()) {
            if (is_space(data_[pos_])) {
                ++pos_;
            } else if (data_[pos_] == '#') {
                while (pos_ < data_.size() && data_[pos_] != '\n') ++pos_;
            } else {
                break;
            }
        }
    }

    std::uint64_t read_uint(const char* what) {
        skip_space_and_comments();
        const auto start = pos_;
        std::uint64_t value = 0;
        const auto* end = data_.data() + data_.size();
        auto [ptr, ec] = std::from_chars(here(), end, value);
        if (ec != std::errc() || ptr == here()) {
            throw FormatError(std::string("expected ") + what, start);
        }
        pos_ = static_cast<std::size_t>(ptr - data_.data());
        if (pos_ < data_.size() && !is_space(data_[pos_]) && data_[pos_] != '#') {
            throw FormatError(std::string("malformed ") + what, start);
        }
        return value;
    }

private:
    const std::string& data_;
    std::size_t pos_ = 0;
};

std::size_t checked_extent(Cursor& cur, const char* what) {
    const auto at = cur.pos();
    const auto v = cur.read_uint(what);
    if (v == 0 || v > (std::uint64_t{1} << 31)) throw FormatError(std::string("invalid ") + what, at);
    return static_cast<std::size_t>(v);
}

std::uint32_t checked_maxval(Cursor& cur) {
    cur.skip_space_and_comments();
    const auto at = cur.pos();
    const auto v = cur.read_uint("maxval");
    if (v == 0 || v > kMaxValue) {
        throw FormatError("maxval " + std::to_string(v) + " outside 1..65535", at);
    }
    return static_cast<std::uint32_t>(v);
}

void check_sample(std::uint32_t v, std::uint32_t maxval, std::size_t at) {
    if (v > maxval) {
        throw FormatError("sample " + std::to_string(v) + " exceeds maxval " + std::to_string(maxval), at);
    }
}

GridImage parse_pgm_ascii(Cursor& cur) {
    const auto w = checked_extent(cur, "width");
    const auto h = checked_extent(cur, "height");
    const auto maxval = checked_maxval(cur);
    const Shape shape{w, h};
    std::vector<Value> values(shape.size());
    for (auto& v : values) {
        cur.skip_space_and_comments();
        const auto at = cur.pos();
        if (cur.remaining() == 0) throw FormatError("truncated payload", at);
        const auto s = cur.read_uint("sample");
        if (s > kMaxValue) throw FormatError("sample out of range", at);
        check_sample(static_cast<std::uint32_t>(s), maxval, at);
        v = static_cast<Value>(s);
    }
    return GridImage(shape, std::move(values));
}

GridImage parse_pgm_binary(Cursor& cur) {
    const auto w = checked_extent(cur, "width");
    const auto h = checked_extent(cur, "height");
    const auto maxval = checked_maxval(cur);
    if (cur.remaining() == 0 || !is_space(*cur.here())) {
        throw FormatError("expected single whitespace after maxval", cur.pos());
    }
    cur.advance(1);
    const Shape shape{w, h};
    const std::size_t bytes_per_sample = maxval > 255 ? 2 : 1;
    if (cur.remaining() < shape.size() * bytes_per_sample) {
        throw FormatError("truncated payload: need " + std::to_string(shape.size() * bytes_per_sample) +
                              " bytes, have " + std::to_string(cur.remaining()),
                          cur.pos());
    }
    std::vector<Value> values(shape.size());
    const auto* p = reinterpret_cast<const unsigned char*>(cur.here());
    for (std::size_t i = 0; i < values.size(); ++i) {
        std::uint32_t s = bytes_per_sample == 2 ? (std::uint32_t{p[2 * i]} << 8) | p[2 * i + 1] : p[i];
        check_sample(s, maxval, cur.pos() + i * bytes_per_sample);
        values[i] = static_cast<Value>(s);
    }
    return GridImage(shape, std::move(values));
}

GridImage parse_volume(Cursor& cur) {
    const auto w = checked_extent(cur, "width");
    const auto h = checked_extent(cur, "height");
    const auto d = checked_extent(cur, "depth");
    const auto maxval = checked_maxval(cur);
    if (cur.remaining() == 0 || *cur.here() != '\n') {
        throw FormatError("expected newline after P3D header", cur.pos());
    }
    cur.advance(1);
    const Shape shape{w, h, d};
    if (cur.remaining() < shape.size() * 2) {
        throw FormatError("truncated payload: need " + std::to_string(shape.size() * 2) + " bytes, have " +
                              std::to_string(cur.remaining()),
                          cur.pos());
    }
    std::vector<Value> values(shape.size());
    const auto* p = reinterpret_cast<const unsigned char*>(cur.here());
    for (std::size_t i = 0; i < values.size(); ++i) {
        std::uint32_t s = std::uint32_t{p[2 * i]} | (std::uint32_t{p[2 * i + 1]} << 8);
        check_sample(s, maxval, cur.pos() + 2 * i);
        values[i] = static_cast<Value>(s);
    }
    return GridImage(shape, std::move(values));
}

std::uint32_t canonical_maxval(const GridImage& image) { return image.max_value() <= 255 ? 255 : kMaxValue; }

}  // namespace

GridImage read_image(std::istream& in) {
    const std::string data{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    Cursor cur(data);
    if (data.rfind("P3D", 0) == 0 && data.size() > 3 && is_space(data[3])) {
        cur.advance(3);
        return parse_volume(cur);
    }
    if (data.size() >= 3 && data[0] == 'P' && is_space(data[2])) {
        if (data[1] == '2') {
            cur.advance(2);
            return parse_pgm_ascii(cur);
        }
        if (data[1] == '5') {
            cur.advance(2);
            return parse_pgm_binary(cur);
        }
    }
    throw FormatError("unrecognized magic number (expected P2, P5 or P3D)", 0);
}

GridImage load_image(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    try {
        return read_image(in);
    } catch (const FormatError& e) {
        throw FormatError(path.string() + ": " + e.message(), e.offset());
    }
}

void write_image(std::ostream& out, const GridImage& image, PgmEncoding encoding) {
    const auto& shape = image.shape();
    const auto maxval = canonical_maxval(image);
    if (shape.rank() == 3) {
        out << "P3D " << shape.extent(0) << ' ' << shape.extent(1) << ' ' << shape.extent(2) << ' ' << maxval
            << '\n';
        std::string payload(image.size() * 2, '\0');
        for (std::size_t i = 0; i < image.size(); ++i) {
            payload[2 * i] = static_cast<char>(image[i] & 0xFF);
            payload[2 * i + 1] = static_cast<char>(image[i] >> 8);
        }
        out.write(payload.data(), static_cast<std::streamsize>(payload.size()));
        return;
    }
    const auto w = shape.extent(0);
    const auto h = shape.rank() == 2 ? shape.extent(1) : 1;
    if (encoding == PgmEncoding::Ascii) {
        out << "P2\n" << w << ' ' << h << '\n' << maxval << '\n';
        for (std::size_t y = 0; y < h; ++y) {
            for (std::size_t x = 0; x < w; ++x) {
                if (x) out << ' ';
                out << image[y * w + x];
            }
            out << '\n';
        }
        return;
    }
    out << "P5\n" << w << ' ' << h << '\n' << maxval << '\n';
    if (maxval <= 255) {
        std::string payload(image.size(), '\0');
        for (std::size_t i = 0; i < image.size(); ++i) payload[i] = static_cast<char>(image[i]);
        out.write(payload.data(), static_cast<std::streamsize>(payload.size()));
    } else {
        std::string payload(image.size() * 2, '\0');
        for (std::size_t i = 0; i < image.size(); ++i) {
            payload[2 * i] = static_cast<char>(image[i] >> 8);
            payload[2 * i + 1] = static_cast<char>(image[i] & 0xFF);
        }
        out.write(payload.data(), static_cast<std::streamsize>(payload.size()));
    }
}

void save_image(const GridImage& image, const std::filesystem::path& path, PgmEncoding encoding) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    write_image(out, image, encoding);
    if (!out) throw std::runtime_error("write failed for " + path.string());
}

// --- Seeds -------------------------------------------------------------------

SeedList read_seeds(std::istream& in, const Shape& shape) {
    std::map<std::int64_t, std::vector<Coordinate>> by_label;
    std::unordered_map<std::size_t, std::int64_t> owner;
    std::string line;
    std::size_t offset = 0;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        const auto line_offset = offset;
        offset += line.size() + 1;
        ++line_no;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;

        std::istringstream fields(line);
        std::vector<std::int64_t> numbers;
        std::string token;
        while (fields >> token) {
            std::int64_t v = 0;
            auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
            if (ec != std::errc() || ptr != token.data() + token.size()) {
                throw FormatError("line " + std::to_string(line_no) + ": not an integer '" + token + "'",
                                  line_offset);
            }
            numbers.push_back(v);
        }
        if (numbers.size() != shape.rank() + 1) {
            throw FormatError("line " + std::to_string(line_no) + ": expected label and " +
                                  std::to_string(shape.rank()) + " coordinates",
                              line_offset);
        }
        const Coordinate x(std::span<const std::int64_t>(numbers).subspan(1));
        if (!shape.contains(x)) {
            throw FormatError("line " + std::to_string(line_no) + ": coordinate " + x.to_string() +
                                  " outside " + shape.to_string(),
                              line_offset);
        }
        const auto index = shape.index(x);
        const auto label = numbers.front();
        auto [it, inserted] = owner.emplace(index, label);
        if (!inserted) {
            if (it->second != label) {
                throw FormatError("line " + std::to_string(line_no) + ": duplicate coordinate " +
                                      x.to_string() + " (labels " + std::to_string(it->second) + " and " +
                                      std::to_string(label) + ")",
                                  line_offset);
            }
            continue;
        }
        by_label[label].push_back(x);
    }

    SeedList seeds;
    seeds.reserve(by_label.size());
    std::uint32_t dense = 0;
    for (auto& [label, pixels] : by_label) seeds.push_back(Seed{dense++, std::move(pixels)});
    return seeds;
}

SeedList parse_seeds(const std::filesystem::path& path, const Shape& shape) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    return read_seeds(in, shape);
}

void write_seeds(std::ostream& out, const SeedList& seeds) {
    for (const auto& seed : seeds) {
        for (const auto& x : seed.pixels) {
            out << seed.label;
            for (std::size_t a = 0; a < x.rank(); ++a) out << ' ' << x[a];
            out << '\n';
        }
    }
}

}  // namespace popgrow
