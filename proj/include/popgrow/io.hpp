#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "popgrow/grid.hpp"

namespace popgrow {

/// Malformed input file. `offset()` is the byte position where parsing failed
/// (for seed files: the byte offset of the offending line).
class FormatError : public std::runtime_error {
public:
    FormatError(const std::string& what, std::size_t offset);
    [[nodiscard]] std::size_t offset() const noexcept { return offset_; }
    [[nodiscard]] const std::string& message() const noexcept { return message_; }

private:
    std::string message_;
    std::size_t offset_;
};

enum class PgmEncoding { Ascii, Binary };

// Supported files:
//   P2   ASCII PGM, maxval <= 65535
//   P5   binary PGM, 1-byte samples for maxval <= 255, else 2-byte big-endian
//   P3D  "P3D <w> <h> <d> <maxval>\n" + 2-byte little-endian samples, x fastest

[[nodiscard]] GridImage read_image(std::istream& in);
[[nodiscard]] GridImage load_image(const std::filesystem::path& path);

/// 2D images are written as PGM (maxval 255 when every value fits, else
/// 65535); 3D images always as P3D and ignore `encoding`. 1D images are
/// written as a single-row PGM.
void write_image(std::ostream& out, const GridImage& image,
                 PgmEncoding encoding = PgmEncoding::Binary);
void save_image(const GridImage& image, const std::filesystem::path& path,
                PgmEncoding encoding = PgmEncoding::Binary);

/// Seed file: one `<label> <x> <y> [<z>]` per line, `#` comment lines.
/// Labels are renumbered densely by ascending value; the result is ordered
/// by label.
[[nodiscard]] SeedList read_seeds(std::istream& in, const Shape& shape);
[[nodiscard]] SeedList parse_seeds(const std::filesystem::path& path, const Shape& shape);
void write_seeds(std::ostream& out, const SeedList& seeds);

}  // namespace popgrow
