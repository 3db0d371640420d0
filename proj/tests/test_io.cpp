#include <random>
#include <sstream>
#include <string>

#include "doctest.h"
#include "popgrow/io.hpp"
#include "support.hpp"

using namespace popgrow;

namespace {

GridImage from_text(const std::string& text) {
    std::istringstream in(text);
    return read_image(in);
}

std::string to_bytes(const GridImage& image, PgmEncoding encoding = PgmEncoding::Binary) {
    std::ostringstream out;
    write_image(out, image, encoding);
    return out.str();
}

SeedList seeds_from(const std::string& text, const Shape& shape) {
    std::istringstream in(text);
    return read_seeds(in, shape);
}

}  // namespace

TEST_CASE("ascii and binary pgm decode to the same image") {
    const GridImage expected(Shape{2, 2}, {0, 1, 2, 3});
    CHECK(from_text("P2 2 2 255\n0 1 2 3\n") == expected);
    CHECK(from_text("P2\n# a comment\n2 2\n255\n0 1\n2 3\n") == expected);
    CHECK(from_text(std::string("P5 2 2 255\n") + std::string("\x00\x01\x02\x03", 4)) == expected);
}

TEST_CASE("16-bit binary pgm is big-endian") {
    const auto img = from_text(std::string("P5 2 1 65535\n") + std::string("\x01\x02\xff\xfe", 4));
    CHECK(img == GridImage(Shape{2, 1}, {0x0102, 0xfffe}));
    CHECK(to_bytes(img) == std::string("P5\n2 1\n65535\n") + std::string("\x01\x02\xff\xfe", 4));
}

TEST_CASE("p3d volume is little-endian with x fastest") {
    const GridImage vol(Shape{2, 1, 2}, {1, 0x0203, 4, 65535});
    const auto bytes = to_bytes(vol);
    CHECK(bytes == std::string("P3D 2 1 2 65535\n") + std::string("\x01\x00\x03\x02\x04\x00\xff\xff", 8));
    CHECK(from_text(bytes) == vol);
}

TEST_CASE("round trip over random images") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        for (const auto& shape : {Shape{7, 5}, Shape{4, 3, 5}, Shape{1, 1}, Shape{9}}) {
            for (Value maxv : {Value{1}, Value{255}, Value{65535}}) {
                const auto img = testing::random_image(rng, shape, maxv);
                const auto back = from_text(to_bytes(img));
                CHECK(back.values().size() == img.values().size());
                CHECK(std::equal(back.values().begin(), back.values().end(), img.values().begin()));
                if (shape.rank() > 1) CHECK(back == img);
                CHECK(from_text(to_bytes(img, PgmEncoding::Ascii)).values().size() == img.size());
            }
        }
    }
}

TEST_CASE("one-dimensional images are saved as a single row") {
    const GridImage line(Shape{3}, {5, 6, 7});
    CHECK(from_text(to_bytes(line)) == GridImage(Shape{3, 1}, {5, 6, 7}));
}

TEST_CASE("format errors carry a byte offset") {
    auto fails = [](const std::string& text) {
        try {
            (void)from_text(text);
        } catch (const FormatError& e) {
            return std::string(e.what()).find("at byte") != std::string::npos;
        }
        return false;
    };
    CHECK(fails("P7 2 2 255\n"));
    CHECK(fails("P2 2 x 255\n0 1 2 3"));
    CHECK(fails("P2 2 2 70000\n0 1 2 3"));
    CHECK(fails("P2 2 2 255\n0 1 2"));
    CHECK(fails(std::string("P5 2 2 255\n") + "\x01\x02"));
    CHECK(fails("P2 2 2 3\n0 1 2 9"));
    CHECK(fails(""));

    try {
        (void)from_text(std::string("P5 2 2 255\n") + "\x01\x02");
    } catch (const FormatError& e) {
        CHECK(e.offset() >= 11);
    }
}

TEST_CASE("missing file names the path") {
    try {
        (void)load_image("/nonexistent/popgrow/none.pgm");
        FAIL("expected an error");
    } catch (const std::exception& e) {
        CHECK(std::string(e.what()).find("none.pgm") != std::string::npos);
    }
}

TEST_CASE("seed parsing") {
    const Shape shape{8, 8};
    SUBCASE("two single-pixel seeds") {
        const auto s = seeds_from("0 1 1\n1 5 5\n", shape);
        REQUIRE(s.size() == 2);
        CHECK(s[0] == Seed{0, {{1, 1}}});
        CHECK(s[1] == Seed{1, {{5, 5}}});
    }
    SUBCASE("multi-pixel seed") {
        const auto s = seeds_from("0 1 1\n0 1 2\n", shape);
        REQUIRE(s.size() == 1);
        CHECK(s[0].pixels == std::vector<Coordinate>{{1, 1}, {1, 2}});
    }
    SUBCASE("labels are renumbered densely") {
        const auto s = seeds_from("# header\n7 0 0\n3 1 0\n7 2 0\n", shape);
        REQUIRE(s.size() == 2);
        CHECK(s[0] == Seed{0, {{1, 0}}});
        CHECK(s[1] == Seed{1, {{0, 0}, {2, 0}}});
    }
    SUBCASE("3D seeds") {
        const auto s = seeds_from("0 1 2 3\n", Shape{4, 4, 4});
        CHECK(s[0].pixels == std::vector<Coordinate>{{1, 2, 3}});
    }
    SUBCASE("errors") {
        CHECK_THROWS_AS((void)seeds_from("0 1 1\n1 1 1\n", shape), FormatError);
        CHECK_THROWS_AS((void)seeds_from("0 8 1\n", shape), FormatError);
        CHECK_THROWS_AS((void)seeds_from("0 1\n", shape), FormatError);
        CHECK_THROWS_AS((void)seeds_from("0 a 1\n", shape), FormatError);
        CHECK_THROWS_AS((void)seeds_from("0 1 1 1\n", shape), FormatError);
    }
    SUBCASE("write then read") {
        const SeedList s{{0, {{0, 0}, {3, 4}}}, {1, {{7, 7}}}};
        std::ostringstream out;
        write_seeds(out, s);
        CHECK(seeds_from(out.str(), shape) == s);
    }
}
