#include <random>

#include "doctest.h"
#include "popgrow/oracles.hpp"
#include "support.hpp"

using namespace popgrow;

TEST_CASE("bfs distance") {
    const SeedList corner{{0, {{0, 0}}}};
    CHECK(oracles::bfs_distance(Shape{3, 3}, corner, Neighborhood::four()).values ==
          std::vector<std::uint32_t>{0, 1, 2, 1, 2, 3, 2, 3, 4});

    const GridImage blobs(Shape{4, 2}, {1, 0, 0, 1, 1, 0, 1, 1});
    const auto d = oracles::bfs_distance(Shape{4, 2}, corner, Neighborhood::four(), &blobs);
    CHECK(d.values[4] == 1);
    CHECK(d.values[3] == DistanceMap::kUnreached);
    CHECK(d.values[7] == DistanceMap::kUnreached);
}

TEST_CASE("bfs distance satisfies the shortest-path recurrence") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 20; ++trial) {
        const Shape shape{12, 10};
        const auto domain = testing::random_binary(rng, shape, 0.7);
        const auto seeds = testing::random_point_seeds(rng, shape, 3, &domain);
        const auto v = trial % 2 ? Neighborhood::four() : Neighborhood::eight();
        const auto d = oracles::bfs_distance(shape, seeds, v, &domain);
        for (std::size_t i = 0; i < shape.size(); ++i) {
            if (d.values[i] == 0 || d.values[i] == DistanceMap::kUnreached) continue;
            std::uint32_t best = DistanceMap::kUnreached;
            for (const auto& y : neighbors(shape.coordinate(i), v, shape))
                if (domain.at(y) != 0) best = std::min(best, d.at(y));
            CHECK(d.values[i] == best + 1);
        }
    }
}

TEST_CASE("union-find clusters") {
    const GridImage img(Shape{3, 3}, {1, 0, 1, 0, 0, 0, 1, 1, 1});
    CHECK(oracles::unionfind_clusters(img, Neighborhood::four()).region_count() == 3);
    CHECK(oracles::unionfind_clusters(img, Neighborhood::eight()).region_count() == 3);
    CHECK(oracles::unionfind_clusters(GridImage(Shape{3, 3}), Neighborhood::four()).region_count() == 0);
}

TEST_CASE("naive minima") {
    auto count = [](std::vector<Value> values) {
        const Shape shape{values.size()};
        return oracles::naive_minima(GridImage(shape, std::move(values)), Neighborhood::line()).minima_count();
    };
    CHECK(count({3, 1, 2, 1, 3}) == 2);
    CHECK(count({2, 1, 1, 2}) == 1);
    CHECK(count({4, 4, 4}) == 1);
}

TEST_CASE("iterative reconstruction") {
    const GridImage g(Shape{5}, {3, 1, 2, 0, 4});
    const GridImage f(Shape{5}, {4, 2, 3, 1, 5});
    const auto r = oracles::iterative_erosion_reconstruction(f, g, Neighborhood::line());
    CHECK(r.image == GridImage(Shape{5}, {3, 2, 2, 1, 4}));
    CHECK(r.applications == 2);
    CHECK(r.fixed_index == 1);

    const auto same = oracles::iterative_erosion_reconstruction(g, g, Neighborhood::line());
    CHECK(same.image == g);
    CHECK(same.fixed_index == 0);

    CHECK_THROWS_AS((void)oracles::iterative_erosion_reconstruction(g, f, Neighborhood::line()),
                    std::invalid_argument);
}

TEST_CASE("partition comparison") {
    LabelMap a(Shape{3});
    a.labels = {0, 1, LabelMap::kBoundary};
    LabelMap b = a;
    b.labels = {5, 2, LabelMap::kBoundary};
    CHECK(oracles::same_partition(a, b));
    b.labels = {5, 5, LabelMap::kBoundary};
    CHECK_FALSE(oracles::same_partition(a, b));
    b.labels = {5, 2, LabelMap::kUnassigned};
    CHECK_FALSE(oracles::same_partition(a, b));
}
