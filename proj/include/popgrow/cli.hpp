#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "popgrow/algorithms.hpp"
#include "popgrow/grid.hpp"

namespace popgrow::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDataError = 1;
inline constexpr int kExitUsage = 2;

struct RunReport {
    std::string subcommand;
    std::string dims;
    std::size_t regions = 0;
    std::size_t boundary = 0;
    std::int64_t time_ms = 0;
    std::vector<std::string> outputs;

    /// `subcommand=... dims=... regions=... boundary=... time_ms=... output=...`
    [[nodiscard]] std::string to_line() const;
};

// Label images: 0 = unassigned, 1 = boundary, region r -> r + 2.
[[nodiscard]] GridImage encode_labels(const LabelMap& labels);
[[nodiscard]] LabelMap decode_labels(const GridImage& image);

// Distance images: distances as-is, unreached = 255 (or 65535 once any
// distance reaches 255). Distances >= 65535 are rejected.
[[nodiscard]] GridImage encode_distance(const DistanceMap& distance);

/// `count` distinct pixels drawn uniformly (restricted to I != 0 when a
/// domain is given), labelled 0..count-1 in draw order. Deterministic in
/// `rng_seed`.
[[nodiscard]] SeedList random_seeds(const Shape& shape, std::size_t count, std::uint64_t rng_seed,
                                    const GridImage* domain = nullptr);

struct BenchRow {
    std::size_t n_pixels = 0;
    double ms = 0.0;
};

/// Runs `algorithm` on random square grids of each side length, three
/// repetitions each, and reports the median wall time.
[[nodiscard]] std::vector<BenchRow> bench(const std::vector<std::size_t>& sides, const std::string& algorithm,
                                          std::uint64_t rng_seed, bool timing = true);
void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows);

/// Full command line (argv[0] included). Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace popgrow::cli
