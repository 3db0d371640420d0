#include "popgrow/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <numeric>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "popgrow/io.hpp"

namespace popgrow::cli {

namespace {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

bool timing_disabled() {
    const char* v = std::getenv("POPGROW_NO_TIMING");
    return v && std::string(v) == "1";
}

template <class F>
auto timed(F&& f, std::int64_t& ms) {
    const auto start = std::chrono::steady_clock::now();
    auto result = f();
    ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    return result;
}

std::string join(const std::vector<std::string>& parts, char sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

}  // namespace

// --- Report and encodings ----------------------------------------------------

std::string RunReport::to_line() const {
    std::ostringstream os;
    os << "subcommand=" << subcommand << " dims=" << dims << " regions=" << regions << " boundary=" << boundary
       << " time_ms=" << time_ms << " output=" << join(outputs, ',');
    return os.str();
}

GridImage encode_labels(const LabelMap& labels) {
    std::vector<Value> out(labels.labels.size());
    for (std::size_t i = 0; i < out.size(); ++i) {
        const auto l = labels.labels[i];
        std::int64_t code = l == LabelMap::kUnassigned ? 0 : l == LabelMap::kBoundary ? 1 : std::int64_t{l} + 2;
        if (code > kMaxValue) throw std::runtime_error("label " + std::to_string(l) + " does not fit a 16-bit image");
        out[i] = static_cast<Value>(code);
    }
    return GridImage(labels.shape, std::move(out));
}

LabelMap decode_labels(const GridImage& image) {
    LabelMap out(image.shape());
    for (std::size_t i = 0; i < image.size(); ++i) {
        const auto v = image[i];
        out.labels[i] = v == 0 ? LabelMap::kUnassigned : v == 1 ? LabelMap::kBoundary : std::int32_t{v} - 2;
    }
    return out;
}

GridImage encode_distance(const DistanceMap& distance) {
    std::uint32_t max_reached = 0;
    for (auto d : distance.values)
        if (d != DistanceMap::kUnreached) max_reached = std::max(max_reached, d);
    if (max_reached >= kMaxValue) {
        throw std::runtime_error("distance " + std::to_string(max_reached) + " does not fit a 16-bit image");
    }
    const Value unreached = max_reached >= 255 ? static_cast<Value>(kMaxValue) : Value{255};
    std::vector<Value> out(distance.values.size());
    for (std::size_t i = 0; i < out.size(); ++i) {
        const auto d = distance.values[i];
        out[i] = d == DistanceMap::kUnreached ? unreached : static_cast<Value>(d);
    }
    return GridImage(distance.shape, std::move(out));
}

// --- Seeding -----------------------------------------------------------------

SeedList random_seeds(const Shape& shape, std::size_t count, std::uint64_t rng_seed, const GridImage* domain) {
    std::vector<std::size_t> candidates;
    candidates.reserve(shape.size());
    for (std::size_t i = 0; i < shape.size(); ++i)
        if (!domain || (*domain)[i] != 0) candidates.push_back(i);
    if (count > candidates.size()) {
        throw std::invalid_argument("cannot draw " + std::to_string(count) + " seeds from " +
                                    std::to_string(candidates.size()) + " pixels");
    }
    std::mt19937_64 rng(rng_seed);
    SeedList seeds;
    seeds.reserve(count);
    for (std::size_t k = 0; k < count; ++k) {
        std::uniform_int_distribution<std::size_t> pick(k, candidates.size() - 1);
        std::swap(candidates[k], candidates[pick(rng)]);
        seeds.push_back(Seed{static_cast<std::uint32_t>(k), {shape.coordinate(candidates[k])}});
    }
    return seeds;
}

// --- Benchmark ---------------------------------------------------------------

std::vector<BenchRow> bench(const std::vector<std::size_t>& sides, const std::string& algorithm,
                            std::uint64_t rng_seed, bool timing) {
    if (!std::is_sorted(sides.begin(), sides.end())) throw std::invalid_argument("bench sizes must be ascending");
    std::vector<BenchRow> rows;
    for (auto side : sides) {
        const Shape shape{side, side};
        std::mt19937_64 rng(rng_seed ^ side);
        std::uniform_int_distribution<int> grey(0, 255);
        std::vector<Value> values(shape.size());
        for (auto& v : values) v = static_cast<Value>(grey(rng));
        const GridImage f(shape, std::move(values));
        const auto seeds = random_seeds(shape, 16, rng_seed + side);
        const auto v = Neighborhood::eight();

        std::vector<double> times;
        for (int rep = 0; rep < 3; ++rep) {
            const auto start = std::chrono::steady_clock::now();
            if (algorithm == "distance") {
                (void)distance(shape, seeds, v);
            } else if (algorithm == "watershed") {
                (void)watershed(f, seeds, v);
            } else if (algorithm == "voronoi") {
                (void)voronoi(shape, seeds, v);
            } else if (algorithm == "minima") {
                (void)regional_minima(f, v);
            } else if (algorithm == "dynamic-filter") {
                (void)dynamic_filter(f, 10, v);
            } else {
                throw std::invalid_argument("unknown bench algorithm '" + algorithm + "'");
            }
            const std::chrono::duration<double, std::milli> elapsed = std::chrono::steady_clock::now() - start;
            times.push_back(elapsed.count());
        }
        std::sort(times.begin(), times.end());
        rows.push_back({shape.size(), timing ? times[1] : 0.0});
    }
    return rows;
}

void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows) {
    out << "n_pixels,ms\n";
    for (const auto& r : rows) {
        std::ostringstream ms;
        ms.setf(std::ios::fixed);
        ms.precision(3);
        ms << r.ms;
        out << r.n_pixels << ',' << ms.str() << '\n';
    }
}

// --- Command line ------------------------------------------------------------

namespace {

struct Options {
    std::string command;
    std::string input;
    std::string seeds;
    std::optional<std::size_t> random_seeds;
    std::uint64_t rng_seed = 0;
    std::string restrict_path;
    std::optional<int> neighborhood;
    std::optional<std::uint32_t> h;
    std::string marker;
    std::string output;
    std::string report;
    std::string derive = "none";
    std::string algorithm;
    std::vector<std::size_t> sizes{256, 512, 1024};
};

const std::vector<std::string> kCommands{"voronoi",     "clusters",       "minima",
                                         "distance",    "watershed",      "reconstruct",
                                         "dynamic-filter", "marker-reconstruct", "bench"};

void require(bool present, const std::string& flag, const std::string& command) {
    if (!present) throw UsageError(command + " requires " + flag);
}

GridImage load(const std::string& path, const std::string& flag) {
    if (!std::filesystem::exists(path)) throw std::runtime_error(flag + ": file not found: " + path);
    return load_image(path);
}

Neighborhood pick_neighborhood(const Options& o, const Shape& shape) {
    if (!o.neighborhood) {
        if (shape.rank() == 3) return Neighborhood::six();
        if (shape.rank() == 1) return Neighborhood::line();
        return Neighborhood::four();
    }
    auto v = Neighborhood::from_count(*o.neighborhood);
    if (v.rank() != shape.rank()) {
        throw std::runtime_error("--neighborhood " + std::to_string(*o.neighborhood) + " does not apply to a " +
                                 std::to_string(shape.rank()) + "D image");
    }
    return v;
}

SeedList pick_seeds(const Options& o, const Shape& shape, const GridImage* domain) {
    if (!o.seeds.empty()) {
        if (!std::filesystem::exists(o.seeds)) throw std::runtime_error("--seeds: file not found: " + o.seeds);
        return parse_seeds(o.seeds, shape);
    }
    return random_seeds(shape, *o.random_seeds, o.rng_seed, domain);
}

void validate_usage(const Options& o) {
    const auto& c = o.command;
    if (!o.seeds.empty() && o.random_seeds) throw UsageError("--seeds and --random-seeds are exclusive");
    if (c == "bench") {
        require(!o.algorithm.empty(), "--algorithm", c);
        require(!o.output.empty(), "--output", c);
        return;
    }
    require(!o.input.empty(), "--input", c);
    require(!o.output.empty(), "--output", c);
    const bool needs_seeds = c == "voronoi" || c == "distance" || c == "watershed";
    if (needs_seeds) require(!o.seeds.empty() || o.random_seeds.has_value(), "--seeds or --random-seeds", c);
    if (c == "reconstruct") require(!o.marker.empty(), "--marker", c);
    if (c == "dynamic-filter") require(o.h.has_value(), "--h", c);
    if (c == "marker-reconstruct") {
        require(!o.marker.empty() || !o.seeds.empty() || o.random_seeds.has_value(),
                "--marker, --seeds or --random-seeds", c);
    }
    if (c != "clusters" && o.derive != "none") throw UsageError("--derive only applies to clusters");
}

RunReport execute(const Options& o) {
    RunReport report;
    report.subcommand = o.command;
    report.outputs.push_back(o.output);
    const bool timing = !timing_disabled();

    if (o.command == "bench") {
        const auto rows = bench(o.sizes, o.algorithm, o.rng_seed, timing);
        std::ofstream csv(o.output, std::ios::binary | std::ios::trunc);
        if (!csv) throw std::runtime_error("--output: cannot write " + o.output);
        write_bench_csv(csv, rows);
        report.dims = rows.empty() ? "-" : std::to_string(rows.back().n_pixels);
        return report;
    }

    const auto input = load(o.input, "--input");
    const auto& shape = input.shape();
    report.dims = shape.to_string();
    const auto v = pick_neighborhood(o, shape);

    std::optional<GridImage> domain;
    if (!o.restrict_path.empty()) {
        domain = load(o.restrict_path, "--restrict");
        if (!(domain->shape() == shape)) throw std::runtime_error("--restrict: shape differs from --input");
    }
    const GridImage* dom = domain ? &*domain : nullptr;

    std::int64_t ms = 0;
    GridImage result;
    const auto& c = o.command;
    if (c == "voronoi" || c == "watershed") {
        const auto seeds = pick_seeds(o, shape, dom);
        const auto labels = timed(
            [&] { return c == "voronoi" ? voronoi(shape, seeds, v, dom) : watershed(input, seeds, v, dom); }, ms);
        report.regions = labels.region_count();
        report.boundary = labels.boundary_count();
        result = encode_labels(labels);
    } else if (c == "clusters" && o.derive == "fill-holes") {
        result = timed([&] { return fill_holes(input, v); }, ms);
        report.regions = domain_to_clusters(result, v).region_count();
    } else if (c == "clusters") {
        const auto labels = timed(
            [&] {
                auto l = domain_to_clusters(input, v);
                if (o.derive == "remove-border") return remove_border_components(l);
                if (o.derive == "max-cluster") return max_cluster(l);
                return l;
            },
            ms);
        report.regions = labels.region_count();
        result = encode_labels(labels);
    } else if (c == "minima") {
        const auto minima = timed([&] { return regional_minima(input, v); }, ms);
        const auto labels = minima.minima_labels();
        report.regions = minima.minima_count();
        result = encode_labels(labels);
    } else if (c == "distance") {
        const auto seeds = pick_seeds(o, shape, dom);
        const auto dist = timed([&] { return distance(shape, seeds, v, dom); }, ms);
        report.regions = seeds.size();
        result = encode_distance(dist);
    } else {
        if (c == "reconstruct") {
            const auto marker = load(o.marker, "--marker");
            result = timed([&] { return geodesic_reconstruction(marker, input, v); }, ms);
        } else if (c == "dynamic-filter") {
            result = timed([&] { return dynamic_filter(input, *o.h, v); }, ms);
        } else {
            SeedList seeds;
            if (!o.marker.empty()) {
                const auto marker = load(o.marker, "--marker");
                if (!(marker.shape() == shape)) throw std::runtime_error("--marker: shape differs from --input");
                Seed s{0, {}};
                for (std::size_t i = 0; i < marker.size(); ++i)
                    if (marker[i] != 0) s.pixels.push_back(shape.coordinate(i));
                seeds.push_back(std::move(s));
            } else {
                seeds = pick_seeds(o, shape, nullptr);
            }
            result = timed([&] { return marker_reconstruction(input, seeds, v); }, ms);
        }
        report.regions = regional_minima(result, v).minima_count();
    }

    save_image(result, o.output);
    report.time_ms = timing ? ms : 0;
    return report;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Seeded region growing by pixel aggregation", "popgrow"};
    app.set_help_flag("--help", "Print this help and exit");
    app.add_option("command", o.command, "Algorithm to run")->required()->check(CLI::IsMember(kCommands));
    app.add_option("--input", o.input, "Input image (PGM P2/P5 or P3D)");
    app.add_option("--seeds", o.seeds, "Seed file: <label> <x> <y> [<z>] per line");
    app.add_option("--random-seeds", o.random_seeds, "Draw N uniform random point seeds");
    app.add_option("--rng-seed", o.rng_seed, "Random generator seed");
    app.add_option("--restrict", o.restrict_path, "Binary domain image; growth stays where it is nonzero");
    app.add_option("--neighborhood", o.neighborhood, "4 or 8 (2D), 6 or 26 (3D)")
        ->check(CLI::IsMember({4, 8, 6, 26}));
    app.add_option("--h", o.h, "Dynamic filter depth");
    app.add_option("--marker", o.marker, "Marker image (reconstruct: f >= input; marker-reconstruct: nonzero pixels)");
    app.add_option("--output", o.output, "Output file");
    app.add_option("--report", o.report, "Also write the run report line to this file");
    app.add_option("--derive", o.derive, "clusters post-processing")
        ->check(CLI::IsMember({"none", "remove-border", "max-cluster", "fill-holes"}));
    app.add_option("--algorithm", o.algorithm, "bench: algorithm to time");
    app.add_option("--sizes", o.sizes, "bench: ascending square side lengths")->delimiter(',');

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        if (!reversed.empty()) reversed.pop_back();  // program name
        app.parse(reversed);
        validate_usage(o);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "popgrow: " << e.what() << '\n';
        return kExitUsage;
    } catch (const UsageError& e) {
        err << "popgrow: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        const auto report = execute(o);
        const auto line = report.to_line();
        out << line << '\n';
        if (!o.report.empty()) {
            std::ofstream rf(o.report, std::ios::binary | std::ios::trunc);
            if (!rf) throw std::runtime_error("--report: cannot write " + o.report);
            rf << line << '\n';
        }
    } catch (const UsageError& e) {
        err << "popgrow: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "popgrow: " << e.what() << '\n';
        return kExitDataError;
    }
    return kExitOk;
}

}  // namespace popgrow::cli
