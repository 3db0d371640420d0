#include <random>

#include "doctest.h"
#include "popgrow/grid.hpp"
#include "support.hpp"

using namespace popgrow;

TEST_CASE("neighbors clips to the grid") {
    SUBCASE("corner, 4-neighborhood") {
        const auto n = neighbors({0, 0}, Neighborhood::four(), Shape{3, 3});
        CHECK(n == std::vector<Coordinate>{{1, 0}, {0, 1}});
    }
    SUBCASE("interior, 8-neighborhood") {
        const auto n = neighbors({1, 1}, Neighborhood::eight(), Shape{3, 3});
        CHECK(n.size() == 8);
        for (const auto& y : n) CHECK_FALSE(y == Coordinate{1, 1});
    }
    SUBCASE("1D edge") {
        const auto n = neighbors({0}, Neighborhood::line(), Shape{5});
        CHECK(n == std::vector<Coordinate>{{1}});
    }
    SUBCASE("out-of-bounds center is rejected") {
        CHECK_THROWS_AS((void)neighbors({3, 0}, Neighborhood::four(), Shape{3, 3}), std::out_of_range);
    }
}

TEST_CASE("neighbors property: never self, never outside, symmetric") {
    std::mt19937_64 rng(7);
    const std::vector<std::pair<Shape, Neighborhood>> cases{
        {Shape{5, 4}, Neighborhood::four()},
        {Shape{5, 4}, Neighborhood::eight()},
        {Shape{3, 4, 2}, Neighborhood::six()},
        {Shape{3, 4, 2}, Neighborhood::twenty_six()},
        {Shape{6}, Neighborhood::line()},
    };
    for (const auto& [shape, v] : cases) {
        for (std::size_t i = 0; i < shape.size(); ++i) {
            const auto x = shape.coordinate(i);
            for (const auto& y : neighbors(x, v, shape)) {
                CHECK(shape.contains(y));
                CHECK_FALSE(y == x);
                const auto back = neighbors(y, v, shape);
                CHECK(std::find(back.begin(), back.end(), x) != back.end());
            }
        }
    }
}

TEST_CASE("neighborhood construction") {
    CHECK(Neighborhood::four().size() == 4);
    CHECK(Neighborhood::eight().size() == 8);
    CHECK(Neighborhood::six().size() == 6);
    CHECK(Neighborhood::twenty_six().size() == 26);
    CHECK(Neighborhood::from_count(26) == Neighborhood::twenty_six());
    CHECK_THROWS_AS((void)Neighborhood::from_count(5), std::invalid_argument);

    CHECK(Neighborhood::four().dual() == Neighborhood::eight());
    CHECK(Neighborhood::twenty_six().dual() == Neighborhood::six());

    const auto knight = Neighborhood::from_offsets({{1, 2}, {-1, -2}});
    CHECK(knight.kind() == NeighborhoodKind::Custom);
    CHECK_THROWS_AS((void)knight.dual(), std::invalid_argument);
    CHECK_THROWS_AS((void)Neighborhood::from_offsets({{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS((void)Neighborhood::from_offsets({{1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS((void)Neighborhood::from_offsets({{1, 0}, {-1, 0, 0}}), std::invalid_argument);
}

TEST_CASE("shape addressing is x-fastest row-major") {
    const Shape s{4, 3, 2};
    CHECK(s.size() == 24);
    CHECK(s.index({1, 0, 0}) == 1);
    CHECK(s.index({0, 1, 0}) == 4);
    CHECK(s.index({0, 0, 1}) == 12);
    for (std::size_t i = 0; i < s.size(); ++i) CHECK(s.index(s.coordinate(i)) == i);
    CHECK(s.on_border(0));
    CHECK_FALSE(Shape{3, 3}.on_border(4));
    CHECK_THROWS_AS(Shape({3, 0}), std::invalid_argument);
    CHECK_THROWS_AS(GridImage(Shape{2, 2}, std::vector<Value>{1, 2, 3}), std::invalid_argument);
}

TEST_CASE("add_saturating") {
    const GridImage g(Shape{5}, {3, 1, 2, 0, 4});
    CHECK(add_saturating(g, 1) == GridImage(Shape{5}, {4, 2, 3, 1, 5}));
    CHECK(add_saturating(GridImage(Shape{1}, {65535}), 1) == GridImage(Shape{1}, {65535}));
    CHECK(add_saturating(g, 0) == g);
    CHECK(add_saturating(g, 70000) == GridImage(Shape{5}, std::vector<Value>(5, 65535)));
}

TEST_CASE("complement") {
    CHECK(complement(GridImage(Shape{3}, {1, 0, 1})) == GridImage(Shape{3}, {0, 1, 0}));
    CHECK(complement(GridImage(Shape{2, 2}, 0)) == GridImage(Shape{2, 2}, 1));

    const GridImage big(Shape{4}, {255, 0, 0, 255});
    CHECK(complement(complement(big)) == GridImage(Shape{4}, {1, 0, 0, 1}));

    CHECK_THROWS_AS((void)complement(GridImage(Shape{3}, {0, 1, 2})), std::invalid_argument);
}
